#include "obslab/geometry/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "obslab/core/errors.hpp"

namespace obslab {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw PreconditionError(std::string(what) + " must be positive and finite");
}

}  // namespace

Density Density::constant(double a) {
  require_positive(a, "constant density value");
  return Density(Family::constant, a, 0.0);
}

Density Density::power_capped(double alpha) {
  require_positive(alpha, "power_capped exponent");
  return Density(Family::power_capped, alpha, 0.0);
}

Density Density::scaled_power(double L, double beta) {
  require_positive(L, "scaled_power L");
  require_positive(beta, "scaled_power beta");
  return Density(Family::scaled_power, L, beta);
}

Density Density::custom(std::vector<double> radii, std::vector<double> values, double lipschitz) {
  if (radii.empty() || radii.size() != values.size())
    throw PreconditionError("custom density needs matching, nonempty radius and value tables");
  if (radii.front() != 0.0) throw PreconditionError("custom density table must start at r = 0");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    require_positive(values[i], "custom density value");
    if (i > 0) {
      if (!(radii[i] > radii[i - 1])) throw PreconditionError("custom density radii must increase strictly");
      if (lipschitz > 0.0 && std::fabs(values[i] - values[i - 1]) > lipschitz * (radii[i] - radii[i - 1]))
        throw PreconditionError("custom density table exceeds its Lipschitz bound");
    }
  }
  Density d(Family::custom, 0.0, 0.0);
  d.radii_ = std::move(radii);
  d.values_ = std::move(values);
  return d;
}

double Density::base(double r) const noexcept {
  switch (family_) {
    case Family::constant:
      return p_;
    case Family::power_capped:
      return r <= 1.0 ? 1.0 : std::pow(r, -p_);
    case Family::scaled_power: {
      // min(L, L^{1+beta} r^-beta) = L min(1, (L / r)^beta)
      if (r <= p_) return p_;
      return p_ * std::pow(p_ / r, q_);
    }
    case Family::custom: {
      if (r >= radii_.back()) return values_.back();
      const auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
      const std::size_t i = static_cast<std::size_t>(it - radii_.begin()) - 1;
      const double w = (r - radii_[i]) / (radii_[i + 1] - radii_[i]);
      return values_[i] + w * (values_[i + 1] - values_[i]);
    }
  }
  return 0.0;
}

double Density::operator()(double r) const noexcept { return factor_ * base(r / dilation_); }

Density Density::scaled(double c) const {
  require_positive(c, "density scale factor");
  Density out = *this;
  out.factor_ *= c;
  return out;
}

Density Density::dilated(double r) const {
  require_positive(r, "density dilation");
  Density out = *this;
  out.factor_ *= r;
  out.dilation_ *= r;
  return out;
}

std::string Density::describe() const {
  std::ostringstream os;
  if (factor_ != 1.0) os << factor_ << "*";
  switch (family_) {
    case Family::constant:
      os << "constant(" << p_ << ")";
      break;
    case Family::power_capped:
      os << "power_capped(" << p_ << ")";
      break;
    case Family::scaled_power:
      os << "scaled_power(" << p_ << "," << q_ << ")";
      break;
    case Family::custom:
      os << "custom(" << radii_.size() << " knots)";
      break;
  }
  if (dilation_ != 1.0) os << "(r/" << dilation_ << ")";
  return os.str();
}

Density make_density(std::string_view family, std::span<const double> params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw PreconditionError("density family " + std::string(family) + " takes " + std::to_string(k) +
                              " parameter(s)");
  };
  if (family == "constant") {
    need(1);
    return Density::constant(params[0]);
  }
  if (family == "power_capped") {
    need(1);
    return Density::power_capped(params[0]);
  }
  if (family == "scaled_power") {
    need(2);
    return Density::scaled_power(params[0], params[1]);
  }
  throw PreconditionError("unknown density family '" + std::string(family) + "'");
}

}  // namespace obslab
