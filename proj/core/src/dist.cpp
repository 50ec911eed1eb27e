#include "ruin/dist.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ruin/errors.hpp"

namespace ruin {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

constexpr double kWeightSumTolerance = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidModel(what);
}

void validate(const Family& family) {
  std::visit(
      overloaded{
          [](const Exponential& e) {
            require(std::isfinite(e.mean) && e.mean > 0.0,
                    "exponential mean must be positive and finite");
          },
          [](const Erlang& e) {
            require(e.shape >= 1, "Erlang shape must be >= 1");
            require(std::isfinite(e.mean) && e.mean > 0.0,
                    "Erlang mean must be positive and finite");
          },
          [](const Hyperexponential& h) {
            require(!h.components.empty(),
                    "hyperexponential needs at least one component");
            double total = 0.0;
            for (const auto& c : h.components) {
              require(std::isfinite(c.weight) && c.weight > 0.0,
                      "hyperexponential weights must be strictly positive");
              require(std::isfinite(c.mean) && c.mean > 0.0,
                      "hyperexponential component means must be positive");
              total += c.weight;
            }
            if (std::abs(total - 1.0) > kWeightSumTolerance) {
              std::ostringstream os;
              os.precision(17);
              os << "hyperexponential weights sum to " << total
                 << ", expected 1";
              throw InvalidModel(os.str());
            }
          },
          [](const Degenerate& d) {
            require(std::isfinite(d.point) && d.point >= 0.0,
                    "degenerate point must be nonnegative and finite");
          },
      },
      family);
}

double family_mean(const Family& family) {
  return std::visit(overloaded{
                        [](const Exponential& e) { return e.mean; },
                        [](const Erlang& e) { return e.mean; },
                        [](const Hyperexponential& h) {
                          double m = 0.0;
                          for (const auto& c : h.components) m += c.weight * c.mean;
                          return m;
                        },
                        [](const Degenerate& d) { return d.point; },
                    },
                    family);
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double exponential_draw(double mean, RandomStream& stream) {
  return -mean * std::log(stream.uniform_open0());
}

}  // namespace

DistributionSpec::DistributionSpec(Family family) : family_(std::move(family)) {
  validate(family_);
  mean_ = family_mean(family_);
}

std::string describe(const DistributionSpec& spec) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const Exponential& e) { os << "Exponential(mean=" << e.mean << ")"; },
                 [&](const Erlang& e) {
                   os << "Erlang(k=" << e.shape << ", mean=" << e.mean << ")";
                 },
                 [&](const Hyperexponential& h) {
                   os << "Hyperexponential(";
                   for (std::size_t i = 0; i < h.components.size(); ++i) {
                     if (i) os << ", ";
                     os << h.components[i].weight << "*Exp(" << h.components[i].mean << ")";
                   }
                   os << ")";
                 },
                 [&](const Degenerate& d) { os << "Degenerate(" << d.point << ")"; },
             },
             spec.family());
  return os.str();
}

double raw_moment(const DistributionSpec& spec, int order) {
  if (order < 1 || order > 3) {
    throw DomainError("raw_moment: order must be 1, 2 or 3, got " +
                      std::to_string(order));
  }
  return std::visit(
      overloaded{
          [&](const Exponential& e) { return factorial(order) * std::pow(e.mean, order); },
          [&](const Erlang& e) {
            const double k = e.shape;
            const double m = e.mean;
            switch (order) {
              case 1:
                return m;
              case 2:
                return (k + 1.0) * m * m / k;
              default:
                return (k + 1.0) * (k + 2.0) * m * m * m / (k * k);
            }
          },
          [&](const Hyperexponential& h) {
            double s = 0.0;
            for (const auto& c : h.components) s += c.weight * std::pow(c.mean, order);
            return factorial(order) * s;
          },
          [&](const Degenerate& d) { return std::pow(d.point, order); },
      },
      spec.family());
}

double mgf_domain_sup(const DistributionSpec& spec) {
  return std::visit(overloaded{
                        [](const Exponential& e) { return 1.0 / e.mean; },
                        [](const Erlang& e) { return e.shape / e.mean; },
                        [](const Hyperexponential& h) {
                          double sup = std::numeric_limits<double>::infinity();
                          for (const auto& c : h.components) sup = std::min(sup, 1.0 / c.mean);
                          return sup;
                        },
                        [](const Degenerate&) {
                          return std::numeric_limits<double>::infinity();
                        },
                    },
                    spec.family());
}

double mgf(const DistributionSpec& spec, double r) {
  if (!(r >= 0.0)) throw DomainError("mgf: argument must be nonnegative");
  const double sup = mgf_domain_sup(spec);
  if (!(r < sup)) {
    std::ostringstream os;
    os.precision(17);
    os << "mgf: argument " << r << " is outside the open domain [0, " << sup
       << ") of " << describe(spec);
    throw DomainError(os.str());
  }
  if (r == 0.0) return 1.0;
  return std::visit(overloaded{
                        [&](const Exponential& e) { return 1.0 / (1.0 - e.mean * r); },
                        [&](const Erlang& e) {
                          const double k = e.shape;
                          return std::pow(k / (k - e.mean * r), e.shape);
                        },
                        [&](const Hyperexponential& h) {
                          double s = 0.0;
                          for (const auto& c : h.components) s += c.weight / (1.0 - c.mean * r);
                          return s;
                        },
                        [&](const Degenerate& d) { return std::exp(d.point * r); },
                    },
                    spec.family());
}

double neg_exp_moment(const DistributionSpec& spec, double r) {
  if (!(r >= 0.0)) throw DomainError("neg_exp_moment: argument must be nonnegative");
  if (r == 0.0) return 1.0;
  return std::visit(overloaded{
                        [&](const Exponential& e) { return 1.0 / (1.0 + e.mean * r); },
                        [&](const Erlang& e) {
                          const double k = e.shape;
                          return std::pow(k / (k + e.mean * r), e.shape);
                        },
                        [&](const Hyperexponential& h) {
                          double s = 0.0;
                          for (const auto& c : h.components) s += c.weight / (1.0 + c.mean * r);
                          return s;
                        },
                        [&](const Degenerate& d) { return std::exp(-d.point * r); },
                    },
                    spec.family());
}

double sample(const DistributionSpec& spec, RandomStream& stream) {
  return std::visit(
      overloaded{
          [&](const Exponential& e) { return exponential_draw(e.mean, stream); },
          [&](const Erlang& e) {
            double log_sum = 0.0;
            for (int i = 0; i < e.shape; ++i) log_sum += std::log(stream.uniform_open0());
            return -(e.mean / e.shape) * log_sum;
          },
          [&](const Hyperexponential& h) {
            const double u = stream.uniform_open0();
            double cumulative = 0.0;
            const auto& comps = h.components;
            std::size_t j = 0;
            for (; j + 1 < comps.size(); ++j) {
              cumulative += comps[j].weight;
              if (u <= cumulative) break;
            }
            return exponential_draw(comps[j].mean, stream);
          },
          [&](const Degenerate& d) { return d.point; },
      },
      spec.family());
}

}  // namespace ruin
