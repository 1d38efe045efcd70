#include "obslab/core/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "obslab/core/errors.hpp"
#include "obslab/simd/kernels.hpp"

namespace obslab {

namespace {

struct Shape {
  int d;
  int n;
  std::size_t size() const {
    std::size_t s = 1;
    for (int a = 0; a < d; ++a) s *= static_cast<std::size_t>(n);
    return s;
  }
  auto key() const { return std::make_tuple(d, n); }
  bool operator<(const Shape& o) const { return key() < o.key(); }
};

struct SignTables {
  std::vector<double> sign;         // (-1)^(sum of indices)
  std::vector<double> sign_scaled;  // sign / sqrt(n^d)
};

// FFTW's planner is not reentrant. Plans are created once under the lock and
// then executed through the new-array interface, which is.
class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  fftw_plan plan(const Shape& s, int direction) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(s.d, s.n, direction);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    const std::size_t size = s.size();
    auto* buf = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * size));
    int dims[3] = {s.n, s.n, s.n};
    fftw_plan p = fftw_plan_dft(s.d, dims, buf, buf, direction, FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    if (p == nullptr) throw NumericalError("FFTW could not create a plan");
    plans_.emplace(key, p);
    return p;
  }

  const SignTables& signs(const Shape& s) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = signs_[s];
    if (!slot) {
      auto t = std::make_unique<SignTables>();
      const std::size_t size = s.size();
      const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(size));
      t->sign.resize(size);
      t->sign_scaled.resize(size);
      for (std::size_t i = 0; i < size; ++i) {
        std::size_t rem = i;
        int parity = 0;
        for (int a = 0; a < s.d; ++a) {
          parity += static_cast<int>(rem % static_cast<std::size_t>(s.n));
          rem /= static_cast<std::size_t>(s.n);
        }
        const double sg = (parity & 1) ? -1.0 : 1.0;
        t->sign[i] = sg;
        t->sign_scaled[i] = sg * inv_sqrt;
      }
      slot = std::move(t);
    }
    return *slot;
  }

  const std::vector<double>& squared_frequencies(const GridSpec& g) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(g.dim(), g.n(), g.box_len());
    auto& slot = freq_[key];
    if (!slot) {
      const GridSpec f = g.as_frequency();
      auto t = std::make_unique<std::vector<double>>(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) {
        const Point p = f.point(i);
        double s = 0.0;
        for (int a = 0; a < f.dim(); ++a) s += p[a] * p[a];
        (*t)[i] = s;
      }
      slot = std::move(t);
    }
    return *slot;
  }

 private:
  PlanCache() = default;
  ~PlanCache() {
    for (auto& [k, p] : plans_) fftw_destroy_plan(p);
  }

  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
  std::map<Shape, std::unique_ptr<SignTables>> signs_;
  std::map<std::tuple<int, int, double>, std::unique_ptr<std::vector<double>>> freq_;
};

void signed_dft(const Shape& s, std::span<cplx> data, int direction, bool unitary) {
  if (data.size() != s.size()) throw PreconditionError("transform buffer has the wrong length");
  auto& cache = PlanCache::instance();
  const SignTables& tab = cache.signs(s);
  fftw_plan p = cache.plan(s, direction);
  const auto& k = simd::kernels();
  k.scale_real(data.data(), tab.sign.data(), data.size());
  auto* raw = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(p, raw, raw);
  k.scale_real(data.data(), unitary ? tab.sign_scaled.data() : tab.sign.data(), data.size());
}

}  // namespace

void unitary_forward(int d, int n, std::span<cplx> data) { signed_dft({d, n}, data, FFTW_FORWARD, true); }

void unitary_inverse(int d, int n, std::span<cplx> data) { signed_dft({d, n}, data, FFTW_BACKWARD, true); }

Field fourier_forward(const Field& f) {
  if (f.grid().is_frequency()) throw PreconditionError("fourier_forward expects a field on a space grid");
  Field out(f.grid().dual(), std::vector<cplx>(f.samples().begin(), f.samples().end()));
  signed_dft({f.grid().dim(), f.grid().n()}, out.samples(), FFTW_FORWARD, false);
  out *= f.grid().cell_volume();
  return out;
}

Field fourier_inverse(const Field& g) {
  if (!g.grid().is_frequency()) throw PreconditionError("fourier_inverse expects a field on a frequency grid");
  Field out(g.grid().dual(), std::vector<cplx>(g.samples().begin(), g.samples().end()));
  signed_dft({g.grid().dim(), g.grid().n()}, out.samples(), FFTW_BACKWARD, false);
  out *= g.grid().cell_volume();
  return out;
}

const std::vector<double>& squared_frequencies(const GridSpec& grid) {
  return PlanCache::instance().squared_frequencies(grid);
}

}  // namespace obslab
