// SPDX-License-Identifier: MIT

#include "vprof/series_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <utility>

#include "vprof/tree.hpp"

namespace vprof {

namespace {

BigInt to_bigint(__int128 v) {
  const bool neg = v < 0;
  auto u = static_cast<unsigned __int128>(neg ? -v : v);
  BigInt r(static_cast<unsigned long>(u >> 64));
  r <<= 64;
  r += static_cast<unsigned long>(u & ~0ULL);
  return neg ? BigInt(-r) : r;
}

// Scratch for dense per-tree occupation counts; count[(n-1) + x] = M_x.
// Cleared via the touched list so a full enumeration pass stays O(n) per tree.
struct OccupationScratch {
  std::vector<long long> count;
  std::vector<int> touched;
  std::vector<std::pair<std::int32_t, int>> stack;

  void reset(int n) {
    count.assign(static_cast<std::size_t>(2 * n - 1), 0);
    touched.clear();
    stack.clear();
  }

  void fill(const BinaryTree& t, int n) {
    for (int idx : touched) count[static_cast<std::size_t>(idx)] = 0;
    touched.clear();
    stack.clear();
    stack.emplace_back(t.root, 0);
    const int off = n - 1;
    while (!stack.empty()) {
      auto [j, x] = stack.back();
      stack.pop_back();
      const int idx = off + x;
      if (count[static_cast<std::size_t>(idx)] == 0) touched.push_back(idx);
      ++count[static_cast<std::size_t>(idx)];
      const TreeNode& nd = t.nodes[static_cast<std::size_t>(j)];
      if (nd.left != kNoChild) stack.emplace_back(nd.left, x - 1);
      if (nd.right != kNoChild) stack.emplace_back(nd.right, x + 1);
    }
  }

  long long at(int n, int x) const {
    if (x <= -n || x >= n) return 0;
    return count[static_cast<std::size_t>((n - 1) + x)];
  }
};

// A linear form sum_j sign_j * M_{x_j} as (abscissa, sign) pairs.
using Form = std::vector<std::pair<int, int>>;

void check_moment_args(int p) {
  if (p < 1 || p > 6)
    throw std::invalid_argument("moment power must be between 1 and 6");
}

// E[L^p] by expanding the p-fold product into mark multisets and making a
// single enumeration pass over all n-vertex trees.
BigRat form_moment_marks(int n, int p, const Form& form) {
  std::map<std::vector<int>, long long> coeff;
  std::vector<int> tuple(static_cast<std::size_t>(p), 0);
  std::vector<int> marks(static_cast<std::size_t>(p));
  for (;;) {
    int sign = 1;
    for (int j = 0; j < p; ++j) {
      const auto& term = form[static_cast<std::size_t>(tuple[static_cast<std::size_t>(j)])];
      marks[static_cast<std::size_t>(j)] = term.first;
      sign *= term.second;
    }
    std::sort(marks.begin(), marks.end());
    coeff[marks] += sign;
    int j = 0;
    while (j < p && ++tuple[static_cast<std::size_t>(j)] == static_cast<int>(form.size()))
      tuple[static_cast<std::size_t>(j++)] = 0;
    if (j == p) break;
  }

  OccupationScratch sc;
  sc.reset(n);
  __int128 acc = 0;
  enumerate_trees(n, [&](const BinaryTree& t) {
    sc.fill(t, n);
    for (const auto& [ms, c] : coeff) {
      if (c == 0) continue;
      long long prod = 1;
      for (int x : ms) {
        const long long cnt = sc.at(n, x);
        if (cnt == 0) {
          prod = 0;
          break;
        }
        prod *= cnt;
      }
      if (prod != 0) acc += static_cast<__int128>(c) * prod;
    }
  });
  return BigRat(to_bigint(acc)) / BigRat(catalan(n));
}

BigRat form_moment_profile(const ProfileDistribution& dist, int p, const Form& form) {
  BigRat acc(0);
  for (const auto& [prof, w] : dist.weight) {
    if (w == 0) continue;
    long long val = 0;
    for (const auto& [x, sg] : form) val += sg * prof.at(x);
    if (val == 0) continue;
    acc += BigRat(w) * BigRat(int_pow(BigInt(static_cast<long>(val)),
                                      static_cast<std::uint64_t>(p)));
  }
  return acc / BigRat(dist.total);
}

Form displacement_form(int a, int b) {
  return {{b + 1, +1}, {b, -1}, {a + 1, -1}, {a, +1}};
}

}  // namespace

AlgebraicSystem solve_algebraic(int order, YConvention conv) {
  if (order < 4 || order > 512)
    throw std::invalid_argument("solve_algebraic: order must be in [4, 512]");
  AlgebraicSystem sys;
  sys.order = order;
  sys.conv = conv;
  const Fps one = Fps::constant(BigRat(1), order);
  const Fps t = Fps::x(order);

  sys.T = Fps::fixed_point(
      [&](const Fps& T) {
        Fps w = one + T;
        return t * (w * w);
      },
      order);
  sys.y = (conv == YConvention::kTT) ? t * sys.T : t * (sys.T - one);

  // U satisfies U = x(1+U)^2 in its own variable, the same fixed point as T;
  // substituting y for the variable gives the series in t.
  sys.U = sys.T.compose(sys.y);
  {
    Fps w = one + sys.U;
    if (!((sys.U - sys.y * (w * w)).is_zero()))
      throw std::logic_error("solve_algebraic: U residual is nonzero after substitution");
  }

  const Fps b_sqrt = (one - BigRat(4) * sys.y).sqrt().reciprocal();
  const Fps b_ratio = (one + sys.U) * (one - sys.U).reciprocal();
  if (!(b_sqrt == b_ratio))
    throw std::logic_error("solve_algebraic: the two closed forms of B disagree");
  sys.B = b_sqrt;

  if (conv == YConvention::kTT) {
    const Fps pre = t * (one + sys.T);
    sys.W = Fps::fixed_point(
        [&](const Fps& W) { return pre * (one + W * W); }, order);
    if (!(sys.W * sys.W == sys.U))
      throw std::logic_error("solve_algebraic: W^2 != U");
  }
  return sys;
}

Fps branch_gf(const AlgebraicSystem& sys, int i) {
  const auto k = static_cast<std::int64_t>(std::abs(i));
  const Fps& base = (sys.conv == YConvention::kTT) ? sys.W : sys.U;
  return sys.B * base.pow(k);
}

std::vector<BigInt> brute_branches(int i, int max_n) {
  if (max_n < 0 || max_n > kEnumerationCap)
    throw std::invalid_argument("brute_branches: max_n out of range");
  std::vector<BigInt> out(static_cast<std::size_t>(max_n) + 1, BigInt(0));
  if (i == 0) out[0] = 1;  // the empty tree is a single external position at 0
  for (int n = 1; n <= max_n; ++n) {
    long long acc = 0;
    enumerate_trees(n, [&](const BinaryTree& t) {
      const auto xs = abscissas(t);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (t.nodes[j].left == kNoChild && xs[j] - 1 == i) ++acc;
        if (t.nodes[j].right == kNoChild && xs[j] + 1 == i) ++acc;
      }
    });
    out[static_cast<std::size_t>(n)] = static_cast<long>(acc);
  }
  return out;
}

EdgeZoneCheck external_edge_gf(const AlgebraicSystem& sys, int a, int b, int x) {
  if (sys.conv != YConvention::kTT)
    throw std::invalid_argument("external_edge_gf: needs the y = tT convention");
  if (a > b) throw std::invalid_argument("external_edge_gf: requires a <= b");
  const int q = b - a;
  EdgeZoneCheck out;
  out.direct = branch_gf(sys, a - x) - branch_gf(sys, a + 1 - x) -
               branch_gf(sys, b - x) + branch_gf(sys, b + 1 - x);
  const Fps one = Fps::constant(BigRat(1), sys.order);
  const Fps& W = sys.W;
  if (q == 0) {
    out.closed = Fps(sys.order);
  } else if (x <= a) {
    out.closed = sys.B * (one - W) * W.pow(a - x) * (one - W.pow(q));
  } else if (x == a + 1 || x == b) {
    out.closed = sys.B * (W - one) * (one + W.pow(q - 1));
  } else if (x < b) {
    out.closed = sys.B * (W - one) * (W.pow(x - a - 1) + W.pow(b - x));
  } else {
    out.closed = sys.B * (one - W) * W.pow(x - b - 1) * (one - W.pow(q));
  }
  out.equal = out.direct == out.closed;
  return out;
}

ForkCheck fork_second_moment(const AlgebraicSystem& sys) {
  if (sys.conv != YConvention::kTT)
    throw std::invalid_argument("fork_second_moment: needs the y = tT convention");
  const int N = sys.order;
  ForkCheck out;
  out.direct = Fps(N);
  // Term x has valuation 3x - 2, so the sum below the truncation is finite.
  Fps h_prev = sys.B;  // H_{x-1} for x = 1
  for (int x = 1; 3 * x - 2 <= N; ++x) {
    Fps h_x = h_prev * sys.W;
    Fps d = h_prev - h_x;
    out.direct += h_x * d * d;
    h_prev = h_x;
  }
  const Fps one = Fps::constant(BigRat(1), N);
  out.closed = sys.B.pow(3) * sys.W * (one - sys.W).pow(2) *
               (one - sys.W.pow(3)).reciprocal();
  out.equal = out.direct == out.closed;

  for (int n = 6; n <= 14; ++n) {
    const BigRat g = BigRat(catalan(n)) * delta_moment_exact(n, 2, 0);
    const double val =
        g.get_d() * std::sqrt(static_cast<double>(n)) / std::pow(4.0, n);
    out.growth.emplace_back(n, val);
  }
  return out;
}

BigInt marked_count(int n, const std::vector<int>& marks) {
  if (marks.empty() || marks.size() > 6)
    throw std::invalid_argument("marked_count: between 1 and 6 marks");
  OccupationScratch sc;
  sc.reset(n);
  __int128 acc = 0;
  enumerate_trees(n, [&](const BinaryTree& t) {
    sc.fill(t, n);
    long long prod = 1;
    for (int x : marks) {
      const long long cnt = sc.at(n, x);
      if (cnt == 0) {
        prod = 0;
        break;
      }
      prod *= cnt;
    }
    acc += prod;
  });
  return to_bigint(acc);
}

BigRat moment_exact(int n, int p, int a, int b, MomentRoute route) {
  check_moment_args(p);
  if (a >= b) throw std::invalid_argument("moment_exact: requires a < b");
  if (route == MomentRoute::kProfile)
    return moment_exact(profile_distribution(n), p, a, b);
  return form_moment_marks(n, p, displacement_form(a, b));
}

BigRat moment_exact(const ProfileDistribution& dist, int p, int a, int b) {
  check_moment_args(p);
  if (a >= b) throw std::invalid_argument("moment_exact: requires a < b");
  return form_moment_profile(dist, p, displacement_form(a, b));
}

BigRat delta_moment_exact(int n, int p, int i, MomentRoute route) {
  check_moment_args(p);
  if (route == MomentRoute::kProfile)
    return delta_moment_exact(profile_distribution(n), p, i);
  return form_moment_marks(n, p, {{i, +1}, {i - 1, -1}});
}

BigRat delta_moment_exact(const ProfileDistribution& dist, int p, int i) {
  check_moment_args(p);
  return form_moment_profile(dist, p, {{i, +1}, {i - 1, -1}});
}

BigRat profile_moment_exact(int n, int r, int a, MomentRoute route) {
  check_moment_args(r);
  if (route == MomentRoute::kProfile)
    return profile_moment_exact(profile_distribution(n), r, a);
  return form_moment_marks(n, r, {{a, +1}});
}

BigRat profile_moment_exact(const ProfileDistribution& dist, int r, int a) {
  check_moment_args(r);
  return form_moment_profile(dist, r, {{a, +1}});
}

BonusCheck bonus_moment_check(int n, int r, int a, int b) {
  if (r < 1 || r > 3) throw std::invalid_argument("bonus_moment_check: r must be 1..3");
  if (a < 0 || a >= b) throw std::invalid_argument("bonus_moment_check: requires 0 <= a < b");
  BonusCheck out;
  out.n = n;
  out.r = r;
  out.a = a;
  out.b = b;
  out.mu = static_cast<double>(b - a) / std::pow(static_cast<double>(n), 0.25);
  if (out.mu > 2.0)
    throw std::invalid_argument("bonus_moment_check: mu = (b-a) n^{-1/4} must be <= 2");
  const ProfileDistribution dist = profile_distribution(n);
  out.numerator = moment_exact(dist, 2 * r, a, b);
  BigInt dfact(1);
  for (int k = 2 * r - 1; k >= 3; k -= 2) dfact *= k;
  out.denominator = BigRat(dfact) *
                    rat_pow(BigRat(2 * (b - a)), static_cast<std::uint64_t>(r)) *
                    profile_moment_exact(dist, r, a);
  if (out.denominator == 0)
    throw std::domain_error("bonus_moment_check: degenerate denominator");
  out.ratio = out.numerator / out.denominator;
  return out;
}

ExponentProbe singular_exponent_probe(int order) {
  const AlgebraicSystem sys = solve_algebraic(order);
  ExponentProbe out;

  // Slopes next to t = 1/4.  With e = 1 - 4t and y = tT(t), algebra gives
  // 1 - 4y = 2 sqrt(e) - e, so the window values need no cancellation-prone
  // subtractions.
  // The subleading term of 1 - U is a factor (1 - sqrt(2) e^{1/4}), which
  // biases the fitted slope by about -0.35 e^{1/4}; the window below keeps
  // that bias under 0.01 while staying comfortably inside double range.
  std::vector<double> le, lu, lb;
  for (int j = 0; j <= 15; ++j) {
    const long double e = 1e-8L * powl(10.0L, static_cast<long double>(j) / 15.0L);
    const long double one_minus_4y = 2 * sqrtl(e) - e;
    const long double y = (1 - one_minus_4y) / 4;
    const long double root = sqrtl(one_minus_4y);
    const long double one_minus_u = (root - one_minus_4y) / (2 * y);
    le.push_back(static_cast<double>(logl(e)));
    lu.push_back(static_cast<double>(logl(one_minus_u)));
    lb.push_back(static_cast<double>(-logl(root)));  // log B = -log sqrt(1-4y)
  }
  const auto slope = [](const std::vector<double>& xs, const std::vector<double>& ys) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
  };
  out.slope_u = slope(le, lu);
  out.slope_b = slope(le, lb);

  // Series-vs-closed-form cross check well inside the disk of convergence.
  for (const double td : {0.15, 0.2}) {
    const auto t = static_cast<long double>(td);
    const long double T_cl = (1 - 2 * t - sqrtl(1 - 4 * t)) / (2 * t);
    const long double y = t * T_cl;
    const long double root = sqrtl(1 - 4 * y);
    const long double U_cl = (1 - 2 * y - root) / (2 * y);
    const long double B_cl = 1 / root;
    const double du = std::fabs(sys.U.eval_double(td) - static_cast<double>(U_cl));
    const double db = std::fabs(sys.B.eval_double(td) - static_cast<double>(B_cl));
    out.fps_vs_closed = std::max({out.fps_vs_closed, du, db});
  }
  return out;
}

}  // namespace vprof
