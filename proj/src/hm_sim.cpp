#include "conntop/hm_sim.hpp"

#include <algorithm>

namespace conntop {
namespace hm {

namespace {
Rat reduce_mod1(const Rat& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rat r = q - Rat(fl);
  r.canonicalize();
  return r;
}
}  // namespace

BaseGroup BaseGroup::finite(std::vector<std::uint64_t> factors) {
  for (auto n : factors) {
    if (n < 2) throw Error("finite base group factors must be >= 2");
  }
  BaseGroup b;
  b.kind = Kind::Finite;
  b.factors = std::move(factors);
  return b;
}

std::uint64_t BaseGroup::order() const {
  if (kind != Kind::Finite) throw Error("the circle is not finite");
  std::uint64_t o = 1;
  for (auto n : factors) o *= n;
  return o;
}

Elem zero_elem(const BaseGroup& b) {
  Elem e;
  if (b.kind == BaseGroup::Kind::Finite) e.idx = 0;
  return e;
}

Elem make_finite_elem(const BaseGroup& b, std::uint64_t idx) {
  Elem e;
  e.idx = idx % b.order();
  return e;
}

Elem make_circle_elem(const Rat& q) {
  Elem e;
  e.q = reduce_mod1(q);
  return e;
}

namespace {
std::vector<std::uint64_t> decode(const BaseGroup& b, std::uint64_t idx) {
  std::vector<std::uint64_t> coords(b.factors.size());
  for (std::size_t i = 0; i < b.factors.size(); ++i) {
    coords[i] = idx % b.factors[i];
    idx /= b.factors[i];
  }
  return coords;
}

std::uint64_t encode(const BaseGroup& b, const std::vector<std::uint64_t>& coords) {
  std::uint64_t idx = 0;
  for (std::size_t i = b.factors.size(); i-- > 0;) idx = idx * b.factors[i] + coords[i];
  return idx;
}
}  // namespace

Elem add(const BaseGroup& b, const Elem& x, const Elem& y) {
  Elem e;
  if (b.kind == BaseGroup::Kind::Finite) {
    auto cx = decode(b, x.idx);
    auto cy = decode(b, y.idx);
    for (std::size_t i = 0; i < cx.size(); ++i) cx[i] = (cx[i] + cy[i]) % b.factors[i];
    e.idx = encode(b, cx);
  } else {
    e.q = reduce_mod1(x.q + y.q);
  }
  return e;
}

Elem neg(const BaseGroup& b, const Elem& x) {
  Elem e;
  if (b.kind == BaseGroup::Kind::Finite) {
    auto cx = decode(b, x.idx);
    for (std::size_t i = 0; i < cx.size(); ++i) cx[i] = (b.factors[i] - cx[i]) % b.factors[i];
    e.idx = encode(b, cx);
  } else {
    e.q = reduce_mod1(-x.q);
  }
  return e;
}

bool elem_eq(const BaseGroup& b, const Elem& x, const Elem& y) {
  return b.kind == BaseGroup::Kind::Finite ? x.idx == y.idx : x.q == y.q;
}

Rat distance(const BaseGroup& b, const Elem& x, const Elem& y) {
  if (b.kind == BaseGroup::Kind::Finite) return x.idx == y.idx ? Rat(0) : Rat(1);
  Rat d = abs(x.q - y.q);
  return std::min(d, Rat(Rat(1) - d));
}

// --- StepFunction -------------------------------------------------------------

StepFunction::StepFunction(BaseGroup base) : base_(std::move(base)) {
  values_.push_back(zero_elem(base_));
}

StepFunction StepFunction::from_pieces(BaseGroup base, std::vector<Rat> cuts,
                                       std::vector<Elem> values) {
  if (values.size() != cuts.size() + 1) throw Error("step function piece count mismatch");
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (cuts[i] <= 0 || cuts[i] >= 1) throw Error("breakpoints must lie in (0,1)");
    if (i > 0 && !(cuts[i - 1] < cuts[i])) throw Error("breakpoints must increase strictly");
  }
  StepFunction f(std::move(base));
  f.cuts_ = std::move(cuts);
  f.values_ = std::move(values);
  f.canonicalize();
  return f;
}

StepFunction StepFunction::prefix(const BaseGroup& base, const Elem& g, const Rat& t) {
  if (t <= 0) return StepFunction(base);
  if (t >= 1) return from_pieces(base, {}, {g});
  return from_pieces(base, {t}, {g, zero_elem(base)});
}

void StepFunction::canonicalize() {
  std::vector<Rat> cuts;
  std::vector<Elem> values;
  values.push_back(values_.front());
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (!elem_eq(base_, values_[i + 1], values.back())) {
      cuts.push_back(cuts_[i]);
      values.push_back(values_[i + 1]);
    }
  }
  cuts_ = std::move(cuts);
  values_ = std::move(values);
}

bool StepFunction::is_zero() const {
  return cuts_.empty() && elem_eq(base_, values_.front(), zero_elem(base_));
}

Elem StepFunction::value_at(const Rat& x) const {
  std::size_t i = 0;
  while (i < cuts_.size() && cuts_[i] <= x) ++i;
  return values_[i];
}

namespace {

void check_same_base(const StepFunction& f, const StepFunction& g) {
  if (f.base() != g.base()) throw BaseMismatch("step functions over different base groups");
}

// Walk the merged partition of f and g, invoking visit(length, vf, vg).
template <typename Visit>
void walk_pairs(const StepFunction& f, const StepFunction& g, Visit visit) {
  Rat prev(0);
  std::size_t i = 0, j = 0;
  for (;;) {
    Rat next(1);
    if (i < f.cuts().size()) next = std::min(next, f.cuts()[i]);
    if (j < g.cuts().size()) next = std::min(next, g.cuts()[j]);
    visit(Rat(next - prev), f.values()[i], g.values()[j]);
    if (next == 1) break;
    if (i < f.cuts().size() && f.cuts()[i] == next) ++i;
    if (j < g.cuts().size() && g.cuts()[j] == next) ++j;
    prev = next;
  }
}

}  // namespace

StepFunction sf_add(const StepFunction& f, const StepFunction& g) {
  check_same_base(f, g);
  std::vector<Rat> lens;
  std::vector<Elem> vals;
  walk_pairs(f, g, [&](const Rat& len, const Elem& vf, const Elem& vg) {
    if (len == 0) return;
    lens.push_back(len);
    vals.push_back(add(f.base(), vf, vg));
  });
  std::vector<Rat> endpoints;
  Rat acc(0);
  for (std::size_t k = 0; k + 1 < lens.size(); ++k) {
    acc += lens[k];
    endpoints.push_back(acc);
  }
  return StepFunction::from_pieces(f.base(), std::move(endpoints), std::move(vals));
}

StepFunction sf_neg(const StepFunction& f) {
  std::vector<Elem> values;
  for (const auto& v : f.values()) values.push_back(neg(f.base(), v));
  return StepFunction::from_pieces(f.base(), f.cuts(), std::move(values));
}

bool sf_eq(const StepFunction& f, const StepFunction& g) {
  check_same_base(f, g);
  if (f.cuts() != g.cuts()) return false;
  for (std::size_t i = 0; i < f.values().size(); ++i) {
    if (!elem_eq(f.base(), f.values()[i], g.values()[i])) return false;
  }
  return true;
}

Rat mu_diff(const StepFunction& f, const StepFunction& g) {
  check_same_base(f, g);
  Rat total(0);
  walk_pairs(f, g, [&](const Rat& len, const Elem& vf, const Elem& vg) {
    if (!elem_eq(f.base(), vf, vg)) total += len;
  });
  return total;
}

Rat kyfan(const StepFunction& f, const StepFunction& g) {
  check_same_base(f, g);
  std::vector<std::pair<Rat, Rat>> pieces;  // (length, pointwise distance)
  walk_pairs(f, g, [&](const Rat& len, const Elem& vf, const Elem& vg) {
    if (len > 0) pieces.emplace_back(len, distance(f.base(), vf, vg));
  });
  auto excess_measure = [&](const Rat& eps) {
    Rat m(0);
    for (const auto& [len, d] : pieces) {
      if (d > eps) m += len;
    }
    return m;
  };
  std::vector<Rat> candidates;
  candidates.emplace_back(0);
  for (const auto& [len, d] : pieces) {
    candidates.push_back(d);
    candidates.push_back(excess_measure(d));
  }
  Rat best(2);  // above any feasible value
  for (const auto& eps : candidates) {
    if (excess_measure(eps) <= eps && eps < best) best = eps;
  }
  return best;
}

StepFunction truncate(const StepFunction& h, const Rat& s) {
  if (s <= 0) return StepFunction(h.base());
  if (s >= 1) return h;
  std::vector<Rat> cuts;
  std::vector<Elem> values;
  for (std::size_t i = 0; i < h.cuts().size() && h.cuts()[i] < s; ++i) {
    cuts.push_back(h.cuts()[i]);
    values.push_back(h.values()[i]);
  }
  values.push_back(h.values()[cuts.size()]);
  cuts.push_back(s);
  values.push_back(zero_elem(h.base()));
  return StepFunction::from_pieces(h.base(), std::move(cuts), std::move(values));
}

PathCheckReport ball_path_check(const StepFunction& h, const Rat& eps, std::size_t samples) {
  const StepFunction zero(h.base());
  if (!(mu_diff(h, zero) < eps)) {
    throw PreconditionFailed("h does not lie in the eps-ball around zero");
  }
  if (samples == 0) throw PreconditionFailed("sample count must be >= 1");
  std::vector<Rat> points;
  for (std::size_t k = 0; k <= samples; ++k) {
    Rat s(static_cast<long>(k), static_cast<long>(samples));
    s.canonicalize();
    points.push_back(std::move(s));
  }
  for (const auto& t : h.cuts()) points.push_back(t);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  PathCheckReport report;
  report.passed = true;
  std::vector<StepFunction> truncs;
  std::vector<Rat> ball_dist;
  truncs.reserve(points.size());
  for (const auto& s : points) {
    truncs.push_back(truncate(h, s));
    ball_dist.push_back(mu_diff(truncs.back(), zero));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    ++report.samples_checked;
    if (!(ball_dist[i] < eps)) {
      report.passed = false;
      report.max_deviation = std::max(report.max_deviation, Rat(ball_dist[i] - eps));
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      ++report.pairs_checked;
      Rat d = mu_diff(truncs[i], truncs[j]);
      Rat gap = points[j] - points[i];
      if (d > gap) {
        report.passed = false;
        report.max_deviation = std::max(report.max_deviation, Rat(d - gap));
      }
    }
  }
  return report;
}

DensityResult density_approx(const StepFunction& f, std::uint64_t n, const Rat& eps) {
  if (f.base().kind != BaseGroup::Kind::Circle) {
    throw BaseMismatch("density approximation is defined over the circle");
  }
  if (n == 0) throw PreconditionFailed("N must be >= 1");
  std::vector<Elem> values;
  for (const auto& v : f.values()) {
    // nearest k/N: k = floor(qN + 1/2), wrapped
    Rat t = v.q * Rat(static_cast<long>(n));
    t += Rat(1, 2);
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Rat rounded(k, static_cast<long>(n));
    rounded.canonicalize();
    values.push_back(make_circle_elem(rounded));
  }
  StepFunction approx = StepFunction::from_pieces(f.base(), f.cuts(), std::move(values));
  DensityResult out{approx, kyfan(f, approx), Rat(1, 2 * static_cast<long>(n)), false};
  out.within_eps = out.error < eps;
  return out;
}

}  // namespace hm
}  // namespace conntop
