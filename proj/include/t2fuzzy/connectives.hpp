// Copyright 2026 The t2fuzzy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Binary operations on I: t-norms, t-conorms and unconstrained operations,
// with finite-sample checkers for their axioms. Passing a finite-sample check
// is necessary, not sufficient, for the continuum statement.

#include "t2fuzzy/report.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace t2fuzzy {

enum class ConnectiveProfile { t_norm, t_conorm, unconstrained };

/// Marks the lattice operations, for which convolution has an exact
/// solution-set enumeration.
enum class LatticeRole { none, minimum, maximum };

struct ScalarConnective {
  std::string name;
  std::function<Rational(const Rational&, const Rational&)> evaluate;
  ConnectiveProfile profile = ConnectiveProfile::unconstrained;
  LatticeRole role = LatticeRole::none;

  Rational operator()(const Rational& x, const Rational& y) const { return evaluate(x, y); }
};

namespace connectives {

inline ScalarConnective minimum() {
  return {"min", [](const Rational& x, const Rational& y) { return min_of(x, y); },
          ConnectiveProfile::t_norm, LatticeRole::minimum};
}
inline ScalarConnective product() {
  return {"product", [](const Rational& x, const Rational& y) { return Rational(x * y); },
          ConnectiveProfile::t_norm};
}
inline ScalarConnective lukasiewicz() {
  return {"lukasiewicz",
          [](const Rational& x, const Rational& y) { return max_of(x + y - 1, Rational(0)); },
          ConnectiveProfile::t_norm};
}
inline ScalarConnective drastic() {
  return {"drastic",
          [](const Rational& x, const Rational& y) {
            if (x == 1) return y;
            if (y == 1) return x;
            return Rational(0);
          },
          ConnectiveProfile::t_norm};
}
inline ScalarConnective maximum() {
  return {"max", [](const Rational& x, const Rational& y) { return max_of(x, y); },
          ConnectiveProfile::t_conorm, LatticeRole::maximum};
}
inline ScalarConnective probabilistic_sum() {
  return {"probabilistic-sum",
          [](const Rational& x, const Rational& y) { return Rational(x + y - x * y); },
          ConnectiveProfile::t_conorm};
}
inline ScalarConnective bounded_sum() {
  return {"bounded-sum",
          [](const Rational& x, const Rational& y) { return min_of(x + y, Rational(1)); },
          ConnectiveProfile::t_conorm};
}
inline ScalarConnective drastic_conorm() {
  return {"drastic-conorm",
          [](const Rational& x, const Rational& y) {
            if (x == 0) return y;
            if (y == 0) return x;
            return Rational(1);
          },
          ConnectiveProfile::t_conorm};
}
/// (x, y) -> x. Not commutative; used as a negative control.
inline ScalarConnective projection() {
  return {"projection", [](const Rational& x, const Rational&) { return x; },
          ConnectiveProfile::unconstrained};
}

}  // namespace connectives

inline std::vector<ScalarConnective> builtin_connectives() {
  using namespace connectives;
  return {minimum(), product(), lukasiewicz(), drastic(),
          maximum(), probabilistic_sum(), bounded_sum(), drastic_conorm()};
}

/// Built-ins plus "projection", looked up by name.
inline std::optional<ScalarConnective> find_connective(std::string_view name) {
  for (auto& c : builtin_connectives())
    if (c.name == name) return c;
  if (name == "projection") return connectives::projection();
  return std::nullopt;
}

/// De Morgan dual x, y -> 1 - op(1 - x, 1 - y).
inline ScalarConnective dual_connective(const ScalarConnective& op) {
  auto flip = [](ConnectiveProfile p) {
    switch (p) {
      case ConnectiveProfile::t_norm: return ConnectiveProfile::t_conorm;
      case ConnectiveProfile::t_conorm: return ConnectiveProfile::t_norm;
      default: return ConnectiveProfile::unconstrained;
    }
  };
  auto flip_role = [](LatticeRole r) {
    switch (r) {
      case LatticeRole::minimum: return LatticeRole::maximum;
      case LatticeRole::maximum: return LatticeRole::minimum;
      default: return LatticeRole::none;
    }
  };
  auto inner = op.evaluate;
  return {"dual(" + op.name + ")",
          [inner](const Rational& x, const Rational& y) {
            return Rational(1 - inner(Rational(1 - x), Rational(1 - y)));
          },
          flip(op.profile), flip_role(op.role)};
}

namespace detail {

inline std::string scalar_call(const ScalarConnective& op, const Rational& x, const Rational& y) {
  return op.name + "(" + to_string(x) + ", " + to_string(y) + ")";
}

inline Witness scalar_witness(std::vector<Rational> params, std::string lhs, std::string rhs) {
  Witness w;
  w.parameters = std::move(params);
  w.lhs = std::move(lhs);
  w.rhs = std::move(rhs);
  return w;
}

}  // namespace detail

/// (T1)-(T3) plus (T4) for t-norms, (T4') for t-conorms, and both neutral
/// axioms for unconstrained operations, exhaustively over `sample`.
/// The first violating tuple per axiom is kept as the witness.
inline std::vector<AxiomReport> check_connective_axioms(const ScalarConnective& op,
                                                        const std::vector<Rational>& sample) {
  if (sample.empty()) throw DomainError("sample must be nonempty");
  bool has0 = false, has1 = false;
  for (const auto& s : sample) {
    has0 |= s == 0;
    has1 |= s == 1;
  }
  if (!has0 || !has1) throw DomainError("sample must contain 0 and 1");

  AxiomReport t1{"T1"}, t2{"T2"}, t3{"T3"};
  for (const auto& x : sample)
    for (const auto& y : sample) {
      ++t1.trials;
      Rational xy = op(x, y), yx = op(y, x);
      if (xy != yx)
        t1.fail(detail::scalar_witness({x, y}, detail::scalar_call(op, x, y) + " = " +
                                                   to_string(xy),
                                       detail::scalar_call(op, y, x) + " = " + to_string(yx)));
      for (const auto& z : sample) {
        ++t2.trials;
        Rational left = op(xy, z), right = op(x, op(y, z));
        if (left != right)
          t2.fail(detail::scalar_witness({x, y, z}, "(x*y)*z = " + to_string(left),
                                         "x*(y*z) = " + to_string(right)));
        // Monotonicity: y <= z must give x*y <= x*z and y*x <= z*x.
        if (y <= z) {
          ++t3.trials;
          Rational a = op(x, y), b = op(x, z);
          Rational c = op(y, x), d = op(z, x);
          if (a > b)
            t3.fail(detail::scalar_witness({x, y, z}, detail::scalar_call(op, x, y) + " = " +
                                                          to_string(a),
                                           detail::scalar_call(op, x, z) + " = " + to_string(b)));
          else if (c > d)
            t3.fail(detail::scalar_witness({x, y, z}, detail::scalar_call(op, y, x) + " = " +
                                                          to_string(c),
                                           detail::scalar_call(op, z, x) + " = " + to_string(d)));
        }
      }
    }
  std::vector<AxiomReport> out{t1, t2, t3};

  auto neutral = [&](const char* id, const Rational& e) {
    AxiomReport r{id};
    for (const auto& x : sample) {
      ++r.trials;
      Rational ex = op(e, x), xe = op(x, e);
      if (ex != x || xe != x)
        r.fail(detail::scalar_witness(
            {x}, detail::scalar_call(op, e, x) + " = " + to_string(ex) + ", " +
                     detail::scalar_call(op, x, e) + " = " + to_string(xe),
            to_string(x)));
    }
    out.push_back(std::move(r));
  };
  if (op.profile != ConnectiveProfile::t_conorm) neutral("T4", Rational(1));
  if (op.profile != ConnectiveProfile::t_norm) neutral("T4'", Rational(0));
  return out;
}

/// t-norm: x*y = 1 iff x = y = 1. t-conorm: x*y = 0 iff x = y = 0.
inline AxiomReport check_boundary_characterization(const ScalarConnective& op,
                                                   const std::vector<Rational>& sample) {
  if (op.profile == ConnectiveProfile::unconstrained)
    throw DomainError("boundary characterization needs a t-norm or t-conorm profile");
  const bool norm = op.profile == ConnectiveProfile::t_norm;
  const Rational target(norm ? 1 : 0);
  AxiomReport r{norm ? "unit-iff-both-one" : "zero-iff-both-zero"};
  for (const auto& x : sample)
    for (const auto& y : sample) {
      ++r.trials;
      bool hits = op(x, y) == target;
      bool both = x == target && y == target;
      if (hits != both)
        r.fail(detail::scalar_witness({x, y}, detail::scalar_call(op, x, y) + " = " +
                                                  to_string(op(x, y)),
                                      both ? to_string(target) : "!= " + to_string(target)));
    }
  return r;
}

/// {k/n : 0 <= k <= n}.
inline std::vector<Rational> uniform_sample(long long n) {
  std::vector<Rational> out;
  for (long long k = 0; k <= n; ++k) out.push_back(make_rational(k, n));
  return out;
}

}  // namespace t2fuzzy
