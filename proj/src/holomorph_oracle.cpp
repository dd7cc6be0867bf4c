#include "mhol/holomorph_oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <unordered_set>

#include "mhol/error.hpp"

namespace mhol {

namespace {

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<std::uint32_t> generator_indices(const CayleyTable& g) {
  const auto& spec = g.spec();
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < spec.n(); ++i) out.push_back(g.indexer().index(generator(spec, i)));
  return out;
}

// Generators of G' as element indices.
std::vector<std::uint32_t> derived_basis_indices(const CayleyTable& g) {
  const auto& spec = g.spec();
  std::vector<std::uint32_t> out;
  for (std::size_t r = 0; r < spec.m(); ++r) {
    FpVec c(spec.m(), 0);
    c[r] = 1;
    out.push_back(g.indexer().index(central_element(spec, c)));
  }
  return out;
}

std::uint32_t table_power(const CayleyTable& g, std::uint32_t x, std::uint32_t k) {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k; ++i) r = g.mul(r, x);
  return r;
}

std::uint32_t table_commutator(const CayleyTable& g, std::uint32_t x, std::uint32_t y) {
  return g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
}

bool is_bijection(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (auto v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// Closure of a set that should be a regular group of the given degree, stored
// by image of 0. Returns nothing as soon as regularity or the size bound fails.
std::optional<std::vector<Perm>> regular_closure(const std::vector<Perm>& gens, std::uint32_t degree) {
  std::vector<Perm> slot(degree);
  std::deque<std::uint32_t> queue;
  slot[0] = perm_identity(degree);
  queue.push_back(0);
  std::uint32_t filled = 1;
  while (!queue.empty()) {
    const std::uint32_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Perm next = perm_compose(slot[cur], s);
      const std::uint32_t at = next[0];
      if (slot[at].empty()) {
        slot[at] = std::move(next);
        queue.push_back(at);
        ++filled;
      } else if (slot[at] != next) {
        return std::nullopt;
      }
    }
  }
  if (filled != degree) return std::nullopt;
  return slot;
}

// c = h^-1 n h as a function: z -> h(n(h^-1(z))).
Perm conjugate(const Perm& n, const Perm& h, const Perm& h_inv) {
  Perm out(n.size());
  for (std::size_t z = 0; z < n.size(); ++z) out[z] = h[n[h_inv[z]]];
  return out;
}

}  // namespace

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint32_t>(x);
  return out;
}

Perm perm_identity(std::uint32_t degree) {
  Perm out(degree);
  for (std::uint32_t x = 0; x < degree; ++x) out[x] = x;
  return out;
}

PermGroupSmall::PermGroupSmall(std::vector<Perm> generators, std::vector<Perm> elements)
    : generators_(std::move(generators)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool PermGroupSmall::contains(const Perm& x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

PermGroupSmall perm_closure(const std::vector<Perm>& gens, std::uint32_t degree, std::size_t limit) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> order;
  seen.insert(perm_identity(degree));
  order.push_back(perm_identity(degree));
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (const auto& s : gens) {
      Perm next = perm_compose(order[head], s);
      if (seen.insert(next).second) {
        if (order.size() >= limit) throw Error(ErrorKind::BoundExceeded, "permutation group exceeds closure limit");
        order.push_back(std::move(next));
      }
    }
  }
  return PermGroupSmall(gens, std::move(order));
}

PermGroupSmall rho(const CayleyTable& g) {
  if (g.order() > 2000) throw Error(ErrorKind::BoundExceeded, "|G| > 2000 for the regular representation");
  const std::uint32_t ord = g.order();
  std::vector<Perm> elems;
  elems.reserve(ord);
  for (std::uint32_t y = 0; y < ord; ++y) {
    Perm p(ord);
    for (std::uint32_t x = 0; x < ord; ++x) p[x] = g.mul(x, y);
    elems.push_back(std::move(p));
  }
  std::vector<Perm> gens;
  for (auto x : generator_indices(g)) gens.push_back(elems[x]);
  return PermGroupSmall(std::move(gens), std::move(elems));
}

PermGroupSmall enumerate_automorphisms(const CayleyTable& g, bool allow_large) {
  const auto& spec = g.spec();
  const auto& ix = g.indexer();
  const std::size_t n = spec.n();
  const std::uint32_t p = spec.p();
  const std::uint32_t ord = g.order();
  const std::uint32_t pn = ix.quotient_order();

  double tuples = 1;
  for (std::size_t i = 0; i < n; ++i) tuples *= ord;
  if (!allow_large && tuples > 1e8) throw Error(ErrorKind::BoundExceeded, "automorphism search exceeds 10^8 tuples");

  const auto gens = generator_indices(g);
  // Digits of every element, precomputed.
  std::vector<FpVec> a_digits(pn), c_digits(ix.derived_order());
  for (std::uint32_t u = 0; u < pn; ++u) a_digits[u] = ix.decode_a(u);
  for (std::uint32_t c = 0; c < ix.derived_order(); ++c) c_digits[c] = ix.decode_c(c);

  // spans[i] marks the quotient indices spanned by the first i chosen images.
  std::vector<std::vector<char>> spans(n + 1, std::vector<char>(pn, 0));
  spans[0][0] = 1;
  std::vector<std::uint32_t> y(n);
  std::vector<Perm> found;

  // Row i of the power relations can be tested as soon as every generator it
  // mentions has an image.
  std::vector<std::vector<std::size_t>> rows_at(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t level = i;
    for (std::size_t r = 0; r < spec.m(); ++r)
      if (spec.d()(i, r) != 0) level = std::max(level, spec.pair_at(r).second);
    rows_at[level].push_back(i);
  }
  auto relations_hold = [&](std::size_t depth) {
    for (auto i : rows_at[depth]) {
      std::uint32_t rhs = 0;
      for (std::size_t r = 0; r < spec.m(); ++r) {
        if (spec.d()(i, r) == 0) continue;
        auto [j, k] = spec.pair_at(r);
        rhs = g.mul(rhs, table_power(g, table_commutator(g, y[j], y[k]), spec.d()(i, r)));
      }
      if (table_power(g, y[i], p) != rhs) return false;
    }
    return true;
  };

  auto finish = [&]() {
    std::vector<std::uint32_t> comm(spec.m());
    for (std::size_t r = 0; r < spec.m(); ++r) {
      auto [j, k] = spec.pair_at(r);
      comm[r] = table_commutator(g, y[j], y[k]);
    }
    // Image of the normal form prod y_i^{a_i} prod comm_r^{c_r}.
    std::vector<std::vector<std::uint32_t>> ypow(n, std::vector<std::uint32_t>(p)), cpow(spec.m(), std::vector<std::uint32_t>(p));
    for (std::size_t i = 0; i < n; ++i)
      for (std::uint32_t k = 0; k < p; ++k) ypow[i][k] = table_power(g, y[i], k);
    for (std::size_t r = 0; r < spec.m(); ++r)
      for (std::uint32_t k = 0; k < p; ++k) cpow[r][k] = table_power(g, comm[r], k);
    Perm phi(ord);
    for (std::uint32_t x = 0; x < ord; ++x) {
      const auto& a = a_digits[ix.a_index(x)];
      const auto& c = c_digits[ix.c_index(x)];
      std::uint32_t img = 0;
      for (std::size_t i = 0; i < n; ++i) img = g.mul(img, ypow[i][a[i]]);
      for (std::size_t r = 0; r < spec.m(); ++r) img = g.mul(img, cpow[r][c[r]]);
      phi[x] = img;
    }
    if (!is_bijection(phi)) return;
    for (std::uint32_t x = 0; x < ord; ++x)
      for (auto s : gens)
        if (phi[g.mul(x, s)] != g.mul(phi[x], phi[s])) return;
    found.push_back(std::move(phi));
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      finish();
      return;
    }
    for (std::uint32_t cand = 0; cand < ord; ++cand) {
      const std::uint32_t u = ix.a_index(cand);
      if (spans[i][u]) continue;
      y[i] = cand;
      if (!relations_hold(i)) continue;
      auto& next = spans[i + 1];
      std::fill(next.begin(), next.end(), 0);
      const auto& ud = a_digits[u];
      for (std::uint32_t w = 0; w < pn; ++w) {
        if (!spans[i][w]) continue;
        FpVec v = a_digits[w];
        for (std::uint32_t k = 0; k < p; ++k) {
          next[ix.encode_vec(v)] = 1;
          v = vec_add(spec.field(), v, ud);
        }
      }
      rec(i + 1);
    }
  };
  rec(0);

  PermGroupSmall all({}, std::move(found));
  auto gens_aut = greedy_generators(all);
  return PermGroupSmall(std::move(gens_aut), all.elements());
}

PermGroupSmall filter_aut_c_z(const PermGroupSmall& auts, const CayleyTable& g) {
  const auto center = center_elements(g);
  std::vector<char> in_center(g.order(), 0);
  for (auto z : center) in_center[z] = 1;
  std::vector<Perm> kept;
  for (const auto& alpha : auts.elements()) {
    bool ok = true;
    for (auto z : center) ok = ok && alpha[z] == z;
    for (std::uint32_t x = 0; ok && x < g.order(); ++x) ok = in_center[g.mul(g.inv(x), alpha[x])];
    if (ok) kept.push_back(alpha);
  }
  PermGroupSmall all({}, std::move(kept));
  auto gens = greedy_generators(all);
  return PermGroupSmall(std::move(gens), all.elements());
}

GeneratorImages generator_images(const Perm& aut, const CayleyTable& g) {
  GeneratorImages out;
  for (auto x : generator_indices(g)) out.push_back(g.indexer().element(aut[x]));
  return out;
}

std::vector<Perm> greedy_generators(const PermGroupSmall& grp) {
  std::vector<Perm> gens;
  if (grp.elements().empty()) return gens;
  const auto degree = static_cast<std::uint32_t>(grp.elements().front().size());
  PermGroupSmall current = perm_closure({}, degree);
  for (const auto& e : grp.elements()) {
    if (current.contains(e)) continue;
    gens.push_back(e);
    current = perm_closure(gens, degree);
    if (current.order() == grp.order()) break;
  }
  return gens;
}

Holomorph::Holomorph(const CayleyTable& g, PermGroupSmall auts) : auts_(std::move(auts)) {
  const auto r = rho(g);
  rho_.resize(g.order());
  for (std::uint32_t y = 0; y < g.order(); ++y) {
    Perm p(g.order());
    for (std::uint32_t x = 0; x < g.order(); ++x) p[x] = g.mul(x, y);
    rho_[y] = std::move(p);
  }
  generators_ = r.generators();
  aut_generators_ = auts_.generators().empty() ? greedy_generators(auts_) : auts_.generators();
  generators_.insert(generators_.end(), aut_generators_.begin(), aut_generators_.end());

  // alpha^-1 rho(x) alpha = rho(alpha(x)).
  normalizes_rho_ = true;
  for (const auto& alpha : aut_generators_) {
    const Perm alpha_inv = perm_inverse(alpha);
    for (std::uint32_t x = 0; x < g.order() && normalizes_rho_; ++x)
      normalizes_rho_ = conjugate(rho_[x], alpha, alpha_inv) == rho_[alpha[x]];
  }
}

bool Holomorph::contains(const Perm& h) const {
  if (h.size() != rho_.size() || !is_bijection(h)) return false;
  const std::uint32_t y = h[0];
  // alpha = h rho(y)^-1, i.e. z -> h(z) y^-1.
  const Perm& ry = rho_[y];
  const Perm ry_inv = perm_inverse(ry);
  return auts_.contains(perm_compose(h, ry_inv));
}

Holomorph build_holomorph(const CayleyTable& g, bool allow_large, std::uint64_t cap) {
  auto auts = enumerate_automorphisms(g, allow_large);
  if (static_cast<std::uint64_t>(g.order()) * auts.order() > cap)
    throw Error(ErrorKind::BoundExceeded, "|Hol(G)| exceeds the cap");
  return Holomorph(g, std::move(auts));
}

std::vector<Perm> circle_translations(const CayleyTable& g, const FormTable& form) {
  const std::uint32_t ord = g.order();
  std::vector<Perm> out(ord, Perm(ord));
  for (std::uint32_t x = 0; x < ord; ++x)
    for (std::uint32_t z = 0; z < ord; ++z) out[x][z] = form.circ(g, z, x);
  return out;
}

SubgroupReport subgroup_from_form(const CayleyTable& g, const FormTable& form, const Holomorph& hol,
                                  const PermGroupSmall& aut_cz) {
  const auto& ix = g.indexer();
  const std::uint32_t ord = g.order();
  SubgroupReport rep;
  rep.elements = circle_translations(g, form);
  const auto& el = rep.elements;

  rep.is_regular = std::all_of(el.begin(), el.end(), is_bijection);

  rep.is_subgroup = rep.is_regular && el[0] == perm_identity(ord);
  for (std::uint32_t x = 0; rep.is_subgroup && x < ord; ++x)
    for (std::uint32_t y = 0; rep.is_subgroup && y < ord; ++y) {
      const auto& target = el[el[y][el[x][0]]];
      for (std::uint32_t z = 0; z < ord && rep.is_subgroup; ++z) rep.is_subgroup = el[y][el[x][z]] == target[z];
    }

  rep.is_normal_in_hol = rep.is_subgroup;
  for (const auto& h : hol.generators()) {
    if (!rep.is_normal_in_hol) break;
    const Perm h_inv = perm_inverse(h);
    for (std::uint32_t x = 0; x < ord && rep.is_normal_in_hol; ++x) {
      const Perm c = conjugate(el[x], h, h_inv);
      rep.is_normal_in_hol = c == el[c[0]];
    }
  }

  // gamma(x) : z -> z Delta(z, x).
  std::vector<Perm> gam(ord, Perm(ord));
  for (std::uint32_t x = 0; x < ord; ++x)
    for (std::uint32_t z = 0; z < ord; ++z) gam[x][z] = g.add_central(z, form.value(ix.a_index(z), ix.a_index(x)));
  rep.gamma_in_aut_cz = std::all_of(gam.begin(), gam.end(), [&](const Perm& p) { return aut_cz.contains(p); });
  rep.gamma_anti_hom = true;
  for (std::uint32_t x = 0; x < ord && rep.gamma_anti_hom; ++x)
    for (std::uint32_t y = 0; y < ord && rep.gamma_anti_hom; ++y)
      rep.gamma_anti_hom = gam[g.mul(x, y)] == perm_compose(gam[y], gam[x]);

  rep.equivariant = true;
  const std::uint32_t pn = ix.quotient_order();
  for (const auto& beta : hol.aut_generators()) {
    for (std::uint32_t u = 0; u < pn && rep.equivariant; ++u)
      for (std::uint32_t v = 0; v < pn && rep.equivariant; ++v) {
        const std::uint32_t bx = beta[ix.compose(u, 0)], by = beta[ix.compose(v, 0)];
        const std::uint32_t lhs = form.value(ix.a_index(bx), ix.a_index(by));
        const std::uint32_t rhs = beta[ix.compose(0, form.value(u, v))];
        rep.equivariant = ix.a_index(rhs) == 0 && ix.c_index(rhs) == lhs;
      }
  }
  return rep;
}

CorrespondenceReport cross_check_correspondence(const CayleyTable& g) {
  const auto& spec = g.spec();
  const auto& ix = g.indexer();
  const std::uint32_t ord = g.order();
  const std::uint32_t p = spec.p();
  const std::size_t n = spec.n(), m = spec.m();
  if (ord > 200) throw Error(ErrorKind::BoundExceeded, "correspondence cross-check needs |G| <= 200");

  CorrespondenceReport rep;
  const Holomorph hol = build_holomorph(g);
  const PermGroupSmall aut_cz = filter_aut_c_z(hol.automorphisms(), g);
  rep.aut_order = hol.automorphisms().order();
  rep.aut_cz_order = aut_cz.order();
  rep.hol_order = hol.order();
  if (!hol.normalizes_rho()) rep.failures.push_back("Aut(G) does not normalize rho(G)");

  std::vector<GeneratorImages> aut_images;
  for (const auto& a : hol.aut_generators()) aut_images.push_back(generator_images(a, g));

  // Form side.
  const std::size_t entries = n * n * m;
  double total_forms = 1;
  for (std::size_t i = 0; i < entries; ++i) total_forms *= p;
  if (total_forms > 1e6) throw Error(ErrorKind::BoundExceeded, "more than 10^6 bilinear forms");
  std::set<std::vector<Perm>> form_side;
  std::vector<Residue> digits(entries, 0);
  for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(total_forms); ++code) {
    std::uint64_t rest = code;
    for (std::size_t e = 0; e < entries; ++e) {
      digits[e] = static_cast<Residue>(rest % p);
      rest /= p;
    }
    std::vector<FpVec> tensor(n * n, FpVec(m));
    for (std::size_t ij = 0; ij < n * n; ++ij)
      for (std::size_t r = 0; r < m; ++r) tensor[ij][r] = digits[ij * m + r];
    const BilinearForm form(spec, std::move(tensor));
    ++rep.forms_scanned;
    const bool equi = equivariance_check(form, aut_images);
    auto sub = subgroup_from_form(g, FormTable(form, ix), hol, aut_cz);
    if (equi) {
      ++rep.equivariant_forms;
      if (sub.all()) {
        ++rep.forms_with_valid_subgroup;
        form_side.insert(std::move(sub.elements));
      } else {
        rep.failures.push_back("equivariant form #" + std::to_string(code) + " fails the subgroup checks");
      }
    } else if (sub.is_normal_in_hol) {
      rep.failures.push_back("non-equivariant form #" + std::to_string(code) + " gives a normal subgroup");
    }
  }
  rep.distinct_form_subgroups = form_side.size();

  // Subgroup side: N is generated by c_s rho(s), s in {x_i, z_r}, c_s in aut_cz.
  std::vector<std::uint32_t> gen_idx = generator_indices(g);
  for (auto z : derived_basis_indices(g)) gen_idx.push_back(z);
  const auto& cs = aut_cz.elements();
  double total_cand = 1;
  for (std::size_t i = 0; i < gen_idx.size(); ++i) total_cand *= static_cast<double>(cs.size());
  if (total_cand > 1e6) throw Error(ErrorKind::BoundExceeded, "more than 10^6 subgroup candidates");

  std::vector<std::vector<Perm>> shifted(gen_idx.size());
  for (std::size_t s = 0; s < gen_idx.size(); ++s)
    for (const auto& c : cs) shifted[s].push_back(perm_compose(c, hol.rho_elements()[gen_idx[s]]));

  std::vector<Perm> hol_inv;
  for (const auto& h : hol.generators()) hol_inv.push_back(perm_inverse(h));

  std::set<std::vector<Perm>> sub_side;
  std::vector<std::size_t> choice(gen_idx.size(), 0);
  for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(total_cand); ++k) {
    std::uint64_t rest = k;
    std::vector<Perm> gens;
    for (std::size_t s = 0; s < gen_idx.size(); ++s) {
      gens.push_back(shifted[s][rest % cs.size()]);
      rest /= cs.size();
    }
    ++rep.candidates_scanned;
    auto slot = regular_closure(gens, ord);
    if (!slot) continue;
    bool ok = true;
    // gamma(n) = n rho(n(1))^-1 must lie in Aut_c cap Aut_z.
    for (std::uint32_t x = 0; x < ord && ok; ++x) {
      Perm c(ord);
      const std::uint32_t xinv = g.inv(x);
      for (std::uint32_t z = 0; z < ord; ++z) c[z] = g.mul((*slot)[x][z], xinv);
      ok = aut_cz.contains(c);
    }
    for (std::size_t h = 0; h < hol.generators().size() && ok; ++h)
      for (const auto& nn : gens) {
        const Perm c = conjugate(nn, hol.generators()[h], hol_inv[h]);
        if (c != (*slot)[c[0]]) {
          ok = false;
          break;
        }
      }
    if (ok) sub_side.insert(std::move(*slot));
  }
  rep.subgroups_found = sub_side.size();

  rep.bijection = rep.failures.empty() && rep.distinct_form_subgroups == rep.equivariant_forms &&
                  rep.forms_with_valid_subgroup == rep.equivariant_forms && form_side == sub_side;
  if (form_side != sub_side) rep.failures.push_back("form side and subgroup side differ");
  return rep;
}

Perm witness_perm(const IsoWitness& w, const CayleyTable& g) {
  const auto& ix = g.indexer();
  Perm out(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) out[x] = ix.index(w(ix.element(x)));
  return out;
}

bool conjugation_check(const Perm& theta, const CayleyTable& g, const std::vector<Perm>& n_elements) {
  const std::uint32_t ord = g.order();
  if (theta.size() != ord || !is_bijection(theta) || n_elements.size() != ord) return false;
  const Perm theta_inv = perm_inverse(theta);
  std::vector<char> hit(ord, 0);
  for (std::uint32_t y = 0; y < ord; ++y) {
    // theta^-1 rho(y) theta : z -> theta(theta^-1(z) y).
    Perm c(ord);
    for (std::uint32_t z = 0; z < ord; ++z) c[z] = theta[g.mul(theta_inv[z], y)];
    const std::uint32_t w = c[0];
    if (c != n_elements[w] || hit[w]) return false;
    hit[w] = 1;
  }
  return true;
}

bool conjugation_check(const IsoWitness& w, const CayleyTable& g) {
  return conjugation_check(witness_perm(w, g), g, circle_translations(g, FormTable(w.form, g.indexer())));
}

CircleProfile circle_profile(const CayleyTable& g, const FormTable& form) {
  const auto& ix = g.indexer();
  const std::uint32_t ord = g.order();
  const std::uint32_t pm = ix.derived_order();
  CircleProfile out;

  std::vector<std::uint32_t> cinv(ord, 0);
  for (std::uint32_t x = 0; x < ord; ++x)
    for (std::uint32_t y = 0; y < ord; ++y)
      if (form.circ(g, x, y) == 0) {
        cinv[x] = y;
        break;
      }

  // Z(G, o): elements commuting with everything under o.
  std::size_t center = 0;
  bool all_central = true;
  std::vector<char> in_circle_center(ord, 0);
  for (std::uint32_t x = 0; x < ord; ++x) {
    bool central = true;
    for (std::uint32_t y = 0; y < ord && central; ++y) central = form.circ(g, x, y) == form.circ(g, y, x);
    in_circle_center[x] = central;
    center += central;
    all_central = all_central && central;
  }
  out.abelian = all_central;
  out.center_order = center;
  const auto zg = center_elements(g);
  out.center_equal = zg.size() == center && std::all_of(zg.begin(), zg.end(), [&](auto z) { return in_circle_center[z]; });

  // (G, o)': close the set of o-commutators under o.
  std::vector<char> comm(ord, 0);
  comm[0] = 1;
  std::size_t distinct = 1;
  for (std::uint32_t x = 0; x < ord && distinct < pm; ++x) {
    if (in_circle_center[x]) continue;
    for (std::uint32_t y = 0; y < ord && distinct < pm; ++y) {
      const std::uint32_t k = form.circ(g, form.circ(g, cinv[x], cinv[y]), form.circ(g, x, y));
      if (!comm[k]) {
        comm[k] = 1;
        ++distinct;
      }
    }
  }
  std::vector<std::uint32_t> gens;
  for (std::uint32_t k = 0; k < ord; ++k)
    if (comm[k]) gens.push_back(k);
  std::vector<char> derived(ord, 0);
  std::vector<std::uint32_t> queue{0};
  derived[0] = 1;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (auto s : gens) {
      const std::uint32_t nx = form.circ(g, queue[h], s);
      if (!derived[nx]) {
        derived[nx] = 1;
        queue.push_back(nx);
      }
    }
  out.derived_order = queue.size();
  bool inside = std::all_of(queue.begin(), queue.end(), [&](auto k) { return ix.a_index(k) == 0; });
  out.derived_full = inside && queue.size() == pm;
  return out;
}

}  // namespace mhol
