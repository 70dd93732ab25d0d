#include "mcf/verify.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "mcf/arithmetic.hpp"
#include "mcf/combinatorics.hpp"
#include "mcf/conjugacy.hpp"
#include "mcf/ergodic.hpp"
#include "mcf/random.hpp"

namespace mcf {

namespace {

using Check = std::function<std::string()>;  // empty string on success

struct Named {
  std::string name;
  Check check;
};

std::vector<Named> exact_core_checks() {
  return {
      {"hnf_of_unimodular_is_identity",
       [] {
         for (int n = 1; n <= 4; ++n) {
           const auto& m = map_matrices(n);
           for (const IntMat* u : {&m.V, &m.A[0], &m.A[1], &m.M[0], &m.psi[1]})
             if (hnf(*u) != IntMat::identity(u->dim())) return "n=" + std::to_string(n);
         }
         return std::string();
       }},
      {"inverse_round_trip",
       [] {
         for (int n = 1; n <= 5; ++n) {
           const auto& m = map_matrices(n);
           for (int a = 0; a < 2; ++a)
             if (m.A[a] * unimodular_inverse(m.A[a]) != IntMat::identity(m.A[a].dim()))
               return "n=" + std::to_string(n);
         }
         return std::string();
       }},
  };
}

std::vector<Named> simplex_checks() {
  return {
      {"tent_cylinders_have_measure_2^-t",
       [] {
         for (int n = 1; n <= 3; ++n)
           for (std::size_t t = 0; t <= 6; ++t) {
             Rat total = 0;
             for (unsigned long long b = 0; b < (1ULL << t); ++b) {
               const Rat mu = simplex_lebesgue(tent_cylinder(n, Word::from_bits(b, t)));
               if (mu * (Int(1) << t) != 1) return "n=" + std::to_string(n) + " t=" + std::to_string(t);
               total += mu;
             }
             if (total != 1) return "sum at n=" + std::to_string(n);
           }
         return std::string();
       }},
      {"farey_cylinders_partition_delta",
       [] {
         for (int n = 1; n <= 3; ++n) {
           Rat total = 0;
           for (unsigned long long b = 0; b < (1ULL << 6); ++b)
             total += simplex_lebesgue(farey_cylinder(n, Word::from_bits(b, 6)));
           if (total != 1) return "n=" + std::to_string(n);
         }
         return std::string();
       }},
  };
}

std::vector<Named> maps_checks() {
  return {
      {"inverse_branches_invert",
       [] {
         for (int n = 1; n <= 4; ++n)
           for (std::uint64_t i = 0; i < 20; ++i) {
             Rng rng(splitmix64(i));
             const RatPoint p = random_rational_point(static_cast<std::size_t>(n), rng, 12);
             for (auto map : {MapKind::Monkemeyer, MapKind::Tent})
               for (int a = 0; a < 2; ++a) {
                 const Step s = step(map, inverse_branch(map, a, p));
                 if (s.image != p) return "n=" + std::to_string(n) + " p=" + to_string(p);
               }
           }
         return std::string();
       }},
      {"branches_agree_on_switching_face",
       [] {
         for (int n = 1; n <= 4; ++n)
           for (std::uint64_t i = 0; i < 20; ++i) {
             Rng rng(splitmix64(i + 1000));
             RatPoint p = random_rational_point(static_cast<std::size_t>(n), rng, 12);
             // Push p onto x_1 + x_n = 1 along the first coordinate.
             const Rat x1 = 1 - p.coords.back();
             if (n > 1 && x1 < p.coords[1]) continue;
             p.coords.front() = x1;
             if (n == 1) p.coords.front() = Rat(1, 2);
             for (auto map : {MapKind::Monkemeyer, MapKind::Tent})
               if (apply_branch(map, 0, p) != apply_branch(map, 1, p)) return to_string(p);
           }
         return std::string();
       }},
  };
}

std::vector<Named> conjugacy_checks() {
  return {
      {"classical_question_mark_at_1/3",
       [] { return phi(parse_point("1/3")).value == parse_point("1/4") ? std::string() : std::string("phi(1/3)"); }},
      {"conjugacy_residual",
       [] {
         for (int n = 1; n <= 3; ++n)
           for (std::uint64_t i = 0; i < 10; ++i) {
             Rng rng(splitmix64(i + 77));
             const RatPoint p = random_rational_point(static_cast<std::size_t>(n), rng, 40);
             const double r = distance(phi(monkemeyer_step(p).image).value, tent_step(phi(p).value).image);
             if (r > 2 * kDefaultTolerance) return "n=" + std::to_string(n) + " residual " + std::to_string(r);
           }
         return std::string();
       }},
      {"orientation",
       [] {
         for (std::size_t n = 1; n <= 2; ++n)
           if (!orientation_check(n, 4)) return "n=" + std::to_string(n);
         return std::string();
       }},
  };
}

std::vector<Named> arithmetic_checks() {
  return {
      {"rationals_reach_v1",
       [] {
         for (int q = 1; q <= 10; ++q)
           for (int a = 0; a <= q; ++a)
             for (int b = 0; b <= a; ++b) {
               RatPoint p{{Rat(a, q), Rat(b, q)}};
               for (auto& x : p.coords) x.canonicalize();
               const auto c = classify_point(p);
               if (c.dyadic && (!c.tent_steps || *c.tent_steps > c.tent_bound)) return to_string(p);
             }
         return std::string();
       }},
      {"hnf_lemma",
       [] {
         for (std::size_t t = 1; t <= 6; ++t)
           for (unsigned long long b = 0; b < (1ULL << t); ++b)
             if (!hnf_equiv(Word::from_bits(b, t), 2)) return Word::from_bits(b, t).str();
         return std::string();
       }},
      {"tent_periodic_points_exact",
       [] {
         for (std::size_t s = 1; s <= 4; ++s)
           for (unsigned long long b = 0; b < (1ULL << s); ++b) (void)tent_periodic_point(Word::from_bits(b, s), 2);
         return std::string();
       }},
  };
}

std::vector<Named> ergodic_checks() {
  return {
      {"entropy_increasing_below_log2",
       [] {
         double prev = 0;
         for (int n = 2; n <= 10; ++n) {
           const double h = entropy(n).h_mu;
           if (!(h > prev) || !(h < std::log(2.0))) return "n=" + std::to_string(n);
           prev = h;
         }
         return std::string();
       }},
      {"density_bounded_below",
       [] {
         // inf h = 2^(1-n), attained at (1,0,...,0).
         for (std::size_t n = 2; n <= 4; ++n) {
           const double floor = std::ldexp(1.0, 1 - static_cast<int>(n));
           for (std::uint64_t i = 0; i < 1000; ++i) {
             Rng rng(splitmix64(i));
             const auto x = random_float_point(n, rng);
             if (x[0] > 0 && density_h(x) < floor) return "n=" + std::to_string(n);
           }
         }
         return std::string();
       }},
      {"mu_invariance_depth_3",
       [] {
         for (unsigned long long b = 0; b < 8; ++b) {
           const Word w = Word::from_bits(b, 3);
           const auto cyl = [](const Word& u) { return to_rat_simplex(farey_cylinder(2, u)); };
           const double lhs = mu_of_simplex(cyl(Word::parse("0") + w)) + mu_of_simplex(cyl(Word::parse("1") + w));
           if (std::fabs(lhs - mu_of_simplex(cyl(w))) > 1e-8) return w.str();
         }
         return std::string();
       }},
  };
}

std::vector<Named> combinatorics_checks() {
  return {
      {"all_products_scrambling",
       [] {
         for (int n = 2; n <= 4; ++n)
           if (!all_products_scrambling(n)) return "n=" + std::to_string(n);
         return std::string();
       }},
      {"bound_is_sharp",
       [] {
         if (is_scrambling(map_matrices(2).A[0] * map_matrices(2).A[1])) return std::string("A0 A1");
         for (int n = 2; n <= 4; ++n)
           if (!non_scrambling_word(n, static_cast<std::size_t>(scrambling_bound(n) - 1)))
             return "n=" + std::to_string(n);
         return std::string();
       }},
      {"strategy_descends",
       [] {
         for (int n = 2; n <= 6; ++n)
           if (!strategy_descends(n)) return "n=" + std::to_string(n);
         return std::string();
       }},
      {"chi_injective",
       [] {
         for (int n = 2; n <= 6; ++n) {
           std::set<Chi> seen;
           for (int p = 1; p <= n + 1; ++p)
             for (int q = p + 1; q <= n + 1; ++q)
               if (!seen.insert(chi(n, p, q)).second) return "n=" + std::to_string(n);
         }
         return std::string();
       }},
  };
}

const std::vector<std::pair<std::string, std::function<std::vector<Named>()>>>& registry() {
  static const std::vector<std::pair<std::string, std::function<std::vector<Named>()>>> r = {
      {"exact_core", exact_core_checks},     {"simplex", simplex_checks},
      {"maps", maps_checks},                 {"conjugacy", conjugacy_checks},
      {"arithmetic", arithmetic_checks},     {"ergodic", ergodic_checks},
      {"combinatorics", combinatorics_checks},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, _] : registry()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite) {
  std::vector<CheckResult> out;
  bool matched = false;
  for (const auto& [name, make] : registry()) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    for (const auto& c : make()) {
      CheckResult r{name, c.name, false, {}};
      try {
        r.detail = c.check();
        r.passed = r.detail.empty();
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      out.push_back(std::move(r));
    }
  }
  if (!matched) throw Error(ErrorKind::InvalidInput, "unknown suite '" + std::string(suite) + "'");
  return out;
}

}  // namespace mcf
