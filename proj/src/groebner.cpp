#include "asch/groebner.hpp"

#include <algorithm>
#include <set>

namespace asch {

MPoly reduce(const MPoly& f, const std::vector<MPoly>& divisors) {
  MPoly rem(f.ring());
  MPoly cur = f;
  while (!cur.is_zero()) {
    bool divided = false;
    for (auto& g : divisors) {
      if (g.is_zero()) continue;
      if (divides(g.lead().expo, cur.lead().expo)) {
        Expo q = expo_div(cur.lead().expo, g.lead().expo);
        Rat c = cur.lead().coeff / g.lead().coeff;
        cur = cur - g * MPoly::monomial(f.ring(), std::move(q), c);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem = rem + MPoly::monomial(f.ring(), cur.lead().expo, cur.lead().coeff);
      cur = cur - MPoly::monomial(f.ring(), cur.lead().expo, cur.lead().coeff);
    }
  }
  return rem;
}

namespace {

MPoly s_poly(const MPoly& f, const MPoly& g) {
  Expo l = expo_lcm(f.lead().expo, g.lead().expo);
  MPoly mf = MPoly::monomial(f.ring(), expo_div(l, f.lead().expo),
                             Rat(1) / f.lead().coeff);
  MPoly mg = MPoly::monomial(g.ring(), expo_div(l, g.lead().expo),
                             Rat(1) / g.lead().coeff);
  return f * mf - g * mg;
}

struct Pair {
  int i, j;
  Expo lcm;
  int deg;
};

}  // namespace

std::vector<MPoly> groebner(const std::vector<MPoly>& gens) {
  std::vector<MPoly> basis;
  for (auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return {};
  const Ring ring = basis[0].ring();
  const MonOrder ord = ring->order;

  auto make_pair = [&](int i, int j) {
    Pair p{i, j, expo_lcm(basis[i].lead().expo, basis[j].lead().expo), 0};
    p.deg = total_deg(p.lcm);
    return p;
  };

  std::vector<Pair> pairs;
  for (int i = 0; i < (int)basis.size(); ++i)
    for (int j = i + 1; j < (int)basis.size(); ++j)
      pairs.push_back(make_pair(i, j));

  auto pair_less = [&](const Pair& a, const Pair& b) {
    if (a.deg != b.deg) return a.deg < b.deg;        // normal selection
    if (a.lcm != b.lcm) return mono_less(a.lcm, b.lcm, ord);
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = *it;
    pairs.erase(it);

    const MPoly &f = basis[p.i], &g = basis[p.j];
    // first Buchberger criterion: coprime leading monomials
    if (expo_coprime(f.lead().expo, g.lead().expo)) continue;
    // chain criterion: some k with lt(k) | lcm and both mixed pairs gone
    bool chained = false;
    for (int k = 0; k < (int)basis.size() && !chained; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!divides(basis[k].lead().expo, p.lcm)) continue;
      bool ik_alive = false, jk_alive = false;
      for (auto& q : pairs) {
        if ((q.i == std::min(p.i, k) && q.j == std::max(p.i, k))) ik_alive = true;
        if ((q.i == std::min(p.j, k) && q.j == std::max(p.j, k))) jk_alive = true;
      }
      if (!ik_alive && !jk_alive) chained = true;
    }
    if (chained) continue;

    MPoly r = reduce(s_poly(f, g), basis);
    if (r.is_zero()) continue;
    r = r.monic();
    int n = (int)basis.size();
    basis.push_back(r);
    for (int i = 0; i < n; ++i) pairs.push_back(make_pair(i, n));
  }

  // interreduce: drop elements whose lead is divisible by another lead,
  // then fully reduce each survivor by the others
  std::vector<MPoly> minimal;
  for (int i = 0; i < (int)basis.size(); ++i) {
    bool redundant = false;
    for (int j = 0; j < (int)basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (divides(basis[j].lead().expo, basis[i].lead().expo)) {
        if (basis[j].lead().expo == basis[i].lead().expo)
          redundant = j < i;  // keep the first of equal leads
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<MPoly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    MPoly r = reduce(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const MPoly& a, const MPoly& b) {
    return mono_less(a.lead().expo, b.lead().expo, ord);
  });
  return reduced;
}

bool is_groebner_basis(const std::vector<MPoly>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      if (!reduce(s_poly(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool basis_is_unit(const std::vector<MPoly>& basis) {
  for (auto& g : basis)
    if (!g.is_zero() && g.is_constant()) return true;
  return false;
}

bool in_ideal(const MPoly& f, const std::vector<MPoly>& basis) {
  return reduce(f, basis).is_zero();
}

std::vector<MPoly> eliminate(const Ring& r, const std::vector<MPoly>& gens,
                             const std::vector<std::string>& drop) {
  // lex with dropped variables first acts as a one-block elimination order
  std::vector<std::string> order_vars = drop;
  std::vector<std::string> kept;
  for (auto& v : r->vars) {
    if (std::find(drop.begin(), drop.end(), v) == drop.end()) {
      order_vars.push_back(v);
      kept.push_back(v);
    }
  }
  Ring elim_ring = make_ring(order_vars, MonOrder::lex);
  std::vector<MPoly> lifted;
  for (auto& g : gens) lifted.push_back(g.lift_to(elim_ring));
  std::vector<MPoly> basis = groebner(lifted);

  Ring out_ring = make_ring(kept, r->order);
  std::vector<MPoly> result;
  for (auto& g : basis) {
    bool pure = true;
    for (auto& t : g.terms())
      for (size_t i = 0; i < drop.size() && pure; ++i)
        if (t.expo[i] > 0) pure = false;
    if (pure) result.push_back(g.lift_to(out_ring));
  }
  return result;
}

std::vector<MPoly> saturate(const Ring& r, const std::vector<MPoly>& gens,
                            const MPoly& f) {
  std::string aux = "_sat";
  while (r->index_of(aux) >= 0) aux += "_";
  std::vector<std::string> vars = r->vars;
  vars.push_back(aux);
  Ring ext = make_ring(vars, r->order);
  std::vector<MPoly> ext_gens;
  for (auto& g : gens) ext_gens.push_back(g.lift_to(ext));
  ext_gens.push_back(MPoly::constant(ext, 1) -
                     MPoly::var(ext, aux) * f.lift_to(ext));
  auto elim = eliminate(ext, ext_gens, {aux});
  std::vector<MPoly> result;
  for (auto& g : elim) result.push_back(g.lift_to(r));
  return groebner(result);
}

}  // namespace asch
