#include "homkt/coset.hpp"

#include <algorithm>
#include <set>

#include "homkt/error.hpp"

namespace homkt {

CosetDecomposition CosetDecomposition::from_colouring(const ReductiveAlgebra& g_in,
                                                      std::vector<Colouring> colourings,
                                                      RatMat k_u1_selection, int extra_u1,
                                                      RatVec scales, RatVec u_constants) {
  require(colourings.size() == g_in.ideals.size(), ErrorKind::InvalidColouring,
          "one colouring per simple ideal required");
  require(extra_u1 >= 0, ErrorKind::BadInput, "negative u(1) count");

  CosetDecomposition d;
  d.colourings_ = std::move(colourings);
  d.extra_u1_ = extra_u1;

  ReductiveAlgebra g = g_in;
  g.abelian_dim += extra_u1;
  d.g_ = std::make_shared<CompactAlgebra>(g);
  if (scales.empty()) scales.assign(g.ideals.size(), Rat(1));
  if (u_constants.empty()) u_constants.assign(g.abelian_dim, Rat(1));
  require((int)u_constants.size() == g.abelian_dim, ErrorKind::BadInput,
          "u(1) metric constants do not cover the appended generators");
  d.metric_ = std::make_shared<InvariantMetric>(d.g_, std::move(scales), std::move(u_constants));

  const CompactAlgebra& ca = *d.g_;
  int tdim = ca.toral_dim();

  // Root split: Delta_k is the set of roots supported on the coloured
  // nodes of its ideal.
  for (std::size_t k = 0; k < g.ideals.size(); ++k) {
    const RootSystem& rs = *g.ideals[k];
    for (int node : d.colourings_[k].coloured)
      require(node >= 0 && node < rs.rank(), ErrorKind::InvalidColouring,
              "coloured node out of range for " + rs.type().str());
    for (int p = 0; p < (int)rs.n_positive(); ++p) {
      bool in_k = true;
      for (int i = 0; i < rs.rank(); ++i)
        if (rs.root(p).coeffs[i] != 0 && !d.colourings_[k].coloured.count(i)) in_k = false;
      (in_k ? d.delta_k_ : d.delta_m_).push_back({(int)k, p});
    }
  }

  // Toral split: h_k = coloured coroots + selected abelian directions,
  // h_m = its orthogonal complement under B.
  auto cartan_toral_index = [&](int ideal, int i) {
    return ca.basis_to_toral(ca.cartan(ideal, i));
  };
  for (std::size_t k = 0; k < g.ideals.size(); ++k)
    for (int node : d.colourings_[k].coloured) {
      RatVec v = zero_vec(tdim);
      v[cartan_toral_index((int)k, node)] = 1;
      d.h_k_.push_back(v);
    }
  for (const auto& sel : k_u1_selection) {
    require((int)sel.size() == tdim, ErrorKind::BadInput,
            "k u(1) selection vector has wrong toral dimension");
    // The selection must be central in k: it has to annihilate Delta_k.
    for (const auto& r : d.delta_k_)
      require(d.root_on_toral_raw(ca, r, sel) == 0, ErrorKind::InvalidColouring,
              "selected u(1) direction does not annihilate Delta_k");
    d.h_k_.push_back(sel);
  }
  d.k_u1_selection_ = k_u1_selection;

  RatMat gram = d.metric_->toral_gram();
  if (d.h_k_.empty()) {
    d.h_m_ = identity(tdim);
  } else {
    RatMat constraints;
    for (const auto& w : d.h_k_) constraints.push_back(mat_apply(gram, w));
    d.h_m_ = nullspace(constraints);
  }
  require((int)(d.h_m_.size() + d.h_k_.size()) == tdim, ErrorKind::InvalidColouring,
          "toral split does not span (dependent k u(1) selection?)");

  // Inverse of the combined toral basis for projections.
  RatMat cols(tdim, zero_vec(tdim));
  for (int c = 0; c < tdim; ++c) {
    const RatVec& v = c < (int)d.h_m_.size() ? d.h_m_[c] : d.h_k_[c - d.h_m_.size()];
    for (int r = 0; r < tdim; ++r) cols[r][c] = v[r];
  }
  d.toral_basis_inv_ = invert(cols);

  int nm = (int)d.h_m_.size();
  d.gm_toral_.assign(nm, zero_vec(nm));
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) d.gm_toral_[i][j] = bilinear(d.h_m_[i], gram, d.h_m_[j]);

  for (std::size_t s = 0; s < d.delta_m_.size(); ++s) {
    d.step_index_[{d.delta_m_[s].ideal, d.delta_m_[s].root}] = 2 * (int)s;
  }
  return d;
}

Rat CosetDecomposition::root_on_toral_raw(const CompactAlgebra& ca, const IdealRoot& r,
                                          const RatVec& coords) {
  return ca.root_on_toral(r.ideal, ca.reductive().ideals[r.ideal]->root(r.root), coords);
}

RatMat CosetDecomposition::h_one() const {
  RatMat h1 = h_m_;
  for (const auto& v : k_u1_selection_) h1.push_back(v);
  return h1;
}

std::vector<SubdiagramComponent> CosetDecomposition::k_components() const {
  std::vector<SubdiagramComponent> out;
  for (std::size_t k = 0; k < colourings_.size(); ++k) {
    DynkinDiagram dia = dynkin_diagram(*g_->reductive().ideals[k]);
    auto comps = classify_subdiagram(dia, colourings_[k].coloured);
    out.insert(out.end(), comps.begin(), comps.end());
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (!(x.type == y.type)) return y.type < x.type;
    return x.nodes < y.nodes;
  });
  return out;
}

std::string CosetDecomposition::k_str() const { return component_list_str(k_components()); }

SpRat CosetDecomposition::m_vector(int i) const {
  int nsteps = 2 * (int)delta_m_.size();
  if (i < nsteps) {
    const IdealRoot& r = delta_m_[i / 2];
    int idx = i % 2 == 0 ? g_->e_plus(r.ideal, r.root) : g_->e_minus(r.ideal, r.root);
    return {{idx, Rat(1)}};
  }
  SpRat v;
  const RatVec& coords = h_m_[i - nsteps];
  for (int t = 0; t < (int)coords.size(); ++t)
    if (coords[t] != 0) v.emplace_back(g_->toral_to_basis(t), coords[t]);
  return v;
}

SpRat CosetDecomposition::k_vector(int j) const {
  int nsteps = 2 * (int)delta_k_.size();
  if (j < nsteps) {
    const IdealRoot& r = delta_k_[j / 2];
    int idx = j % 2 == 0 ? g_->e_plus(r.ideal, r.root) : g_->e_minus(r.ideal, r.root);
    return {{idx, Rat(1)}};
  }
  SpRat v;
  const RatVec& coords = h_k_[j - nsteps];
  for (int t = 0; t < (int)coords.size(); ++t)
    if (coords[t] != 0) v.emplace_back(g_->toral_to_basis(t), coords[t]);
  return v;
}

int CosetDecomposition::m_index_of_step(const IdealRoot& r, bool plus) const {
  auto it = step_index_.find({r.ideal, r.root});
  require(it != step_index_.end(), ErrorKind::Internal, "root not in Delta_m");
  return it->second + (plus ? 0 : 1);
}

std::pair<SurdSp, SpRat> CosetDecomposition::split(const SpRat& ambient) const {
  std::map<int, Surd> m_acc;
  std::map<int, Rat> k_acc;
  RatVec toral = zero_vec(g_->toral_dim());
  bool has_toral = false;
  for (const auto& [idx, c] : ambient) {
    const auto& el = g_->element(idx);
    if (el.kind == CompactBasisElement::Kind::Cartan || el.kind == CompactBasisElement::Kind::U) {
      toral[g_->basis_to_toral(idx)] = c;
      has_toral = true;
      continue;
    }
    bool plus = el.kind == CompactBasisElement::Kind::EPlus;
    auto it = step_index_.find({el.ideal, el.index});
    if (it != step_index_.end()) {
      m_acc[it->second + (plus ? 0 : 1)] = Surd(c);
    } else {
      k_acc[idx] = c;
    }
  }
  if (has_toral) {
    RatVec coeffs = mat_apply(toral_basis_inv_, toral);
    int nm = (int)h_m_.size();
    int nsteps = 2 * (int)delta_m_.size();
    for (int t = 0; t < (int)coeffs.size(); ++t) {
      if (coeffs[t] == 0) continue;
      if (t < nm) {
        m_acc[nsteps + t] = Surd(coeffs[t]);
      } else {
        // k toral component, back in ambient coordinates.
        const RatVec& kv = h_k_[t - nm];
        for (int s = 0; s < (int)kv.size(); ++s)
          if (kv[s] != 0) k_acc[g_->toral_to_basis(s)] += coeffs[t] * kv[s];
      }
    }
  }
  return {surd_normalize(std::move(m_acc)), sp_normalize(std::move(k_acc))};
}

Surd CosetDecomposition::gram_m(int i, int j) const {
  int nsteps = 2 * (int)delta_m_.size();
  if (i < nsteps && j < nsteps) {
    if (i != j) return Surd();
    const IdealRoot& r = delta_m_[i / 2];
    return Surd(metric_->b(i % 2 == 0 ? g_->e_plus(r.ideal, r.root) : g_->e_minus(r.ideal, r.root),
                           i % 2 == 0 ? g_->e_plus(r.ideal, r.root)
                                      : g_->e_minus(r.ideal, r.root)));
  }
  if (i >= nsteps && j >= nsteps) return Surd(gm_toral_[i - nsteps][j - nsteps]);
  return Surd();
}

const std::pair<SurdSp, SpRat>& CosetDecomposition::projected_bracket(int i, int j) const {
  long long key = (long long)i * m_dim() + j;
  auto it = bracket_cache_.find(key);
  if (it != bracket_cache_.end()) return it->second;
  SpRat br = g_->bracket(m_vector(i), m_vector(j));
  auto sp = split(br);
  return bracket_cache_.emplace(key, std::move(sp)).first->second;
}

ProjectedBrackets CosetDecomposition::tangent_brackets() const {
  ProjectedBrackets b;
  b.dim = m_dim();
  b.tangent = [this](int i, int j) { return projected_bracket(i, j).first; };
  b.isotropy_pairing = [this](int i, int j, int k, int l) {
    return Surd(metric_->pair(projected_bracket(i, j).second, projected_bracket(k, l).second));
  };
  b.gram = [this](int i, int j) { return gram_m(i, j); };
  int nsteps = 2 * (int)delta_m_.size();
  int nt = (int)h_m_.size();
  b.gram_support = [nsteps, nt](int w) {
    if (w < nsteps) return std::vector<int>{w};
    std::vector<int> t(nt);
    for (int i = 0; i < nt; ++i) t[i] = nsteps + i;
    return t;
  };
  return b;
}

Rat CosetDecomposition::root_on(const IdealRoot& alpha, const RatVec& coords) const {
  return root_on_toral_raw(*g_, alpha, coords);
}

std::optional<std::string> CosetDecomposition::structural_violation() const {
  // Delta_k must annihilate h1 and every Delta_m root must see it.
  RatMat h1 = h_one();
  for (const auto& r : delta_k_)
    for (const auto& v : h1)
      if (root_on(r, v) != 0) return "Delta_k root does not annihilate h1";
  for (const auto& r : delta_m_) {
    bool seen = false;
    for (const auto& v : h1)
      if (root_on(r, v) != 0) seen = true;
    if (!seen) return "Delta_m root annihilates all of h1";
  }
  // Reductivity: [k, m] stays in m.
  for (int j = 0; j < k_dim(); ++j) {
    SpRat z = k_vector(j);
    for (int i = 0; i < m_dim(); ++i) {
      auto [mp, kp] = split(g_->bracket(z, m_vector(i)));
      if (!kp.empty()) return "[k, m] leaves m";
    }
  }
  return std::nullopt;
}

PositivityAssignment positivity_from_regular(const CosetDecomposition& d, const RatVec& lambda) {
  require(lambda.size() == (std::size_t)d.algebra().toral_dim(), ErrorKind::BadInput,
          "lambda must be a toral-coordinate vector");
  for (const auto& r : d.delta_k())
    require(d.root_on(r, lambda) == 0, ErrorKind::BadInput,
            "lambda must annihilate Delta_k (lie in h1)");
  PositivityAssignment out;
  out.lambda = lambda;
  for (const auto& r : d.delta_m()) {
    Rat v = d.root_on(r, lambda);
    if (v == 0) {
      std::string w = "wall root (ideal " + std::to_string(r.ideal) + ", id " +
                      std::to_string(r.root) + ")";
      fail(ErrorKind::NotRegular, w);
    }
    out.eps[r] = v > 0 ? 1 : -1;
  }
  return out;
}

RatVec default_regular_lambda(const CosetDecomposition& d) {
  RatMat h1 = d.h_one();
  require(!h1.empty(), ErrorKind::NotRegular, "h1 is trivial; no regular element exists");
  for (long long t = 1; t < 2000; ++t) {
    RatVec lambda = zero_vec(d.algebra().toral_dim());
    Rat w(1);
    for (const auto& v : h1) {
      lambda = add(lambda, scale(w, v));
      w *= t;
    }
    bool regular = true;
    for (const auto& r : d.delta_m())
      if (d.root_on(r, lambda) == 0) regular = false;
    if (regular) return lambda;
  }
  fail(ErrorKind::NotRegular, "no regular element found (is Delta_k = annihilator of h1?)");
}

PositivityReport verify_positivity(const CosetDecomposition& d, const PositivityAssignment& eps) {
  PositivityReport rep;
  auto flag = [&](const std::string& s) {
    rep.pass = false;
    if (rep.violations.size() < 8) rep.violations.push_back(s);
  };
  const auto& dm = d.delta_m();
  std::set<IdealRoot> dm_set(dm.begin(), dm.end());
  auto sum_root = [&](const IdealRoot& a, int sa, const IdealRoot& b, int sb)
      -> std::optional<std::pair<IdealRoot, int>> {
    if (a.ideal != b.ideal) return std::nullopt;
    const RootSystem& rs = *d.algebra().reductive().ideals[a.ideal];
    int ia = sa > 0 ? a.root : rs.negative_of(a.root);
    int ib = sb > 0 ? b.root : rs.negative_of(b.root);
    auto s = rs.sum(ia, ib);
    if (!s) return std::nullopt;
    int pos = *s < (int)rs.n_positive() ? *s : rs.negative_of(*s);
    int sign = *s < (int)rs.n_positive() ? 1 : -1;
    return std::make_pair(IdealRoot{a.ideal, pos}, sign);
  };
  auto eps_of = [&](const IdealRoot& r, int sign) { return sign * eps.eps.at(r); };

  // Invariance under Delta_k shifts (signed scan).
  for (const auto& a : dm)
    for (int sa : {1, -1})
      for (const auto& b : d.delta_k())
        for (int sb : {1, -1}) {
          auto s = sum_root(a, sa, b, sb);
          if (!s || !dm_set.count(s->first)) continue;
          if (eps_of(a, sa) != eps_of(s->first, s->second))
            flag("eps not invariant under isotropy shift");
        }
  // Closure: eps(a) = eps(b), a + b in Delta_m => same sign.
  for (const auto& a : dm)
    for (int sa : {1, -1})
      for (const auto& b : dm)
        for (int sb : {1, -1}) {
          auto s = sum_root(a, sa, b, sb);
          if (!s || !dm_set.count(s->first)) continue;
          int ea = eps_of(a, sa), eb = eps_of(b, sb);
          if (ea == eb && eps_of(s->first, s->second) != ea)
            flag("eps not closed under root addition");
        }
  // Induced positive system: closure within Delta_m^+ and under
  // adding isotropy roots.
  for (const auto& a : dm)
    for (int sa : {1, -1}) {
      if (eps_of(a, sa) != 1) continue;
      for (const auto& b : d.delta_k())
        for (int sb : {1, -1}) {
          auto s = sum_root(a, sa, b, sb);
          if (s && dm_set.count(s->first) && eps_of(s->first, s->second) != 1)
            flag("Delta_m^+ not ad(k)-invariant");
        }
    }
  return rep;
}

CartanPairing solve_cartan_pairing(const CosetDecomposition& d) {
  const RatMat& hm = d.h_m();
  require(hm.size() % 2 == 0, ErrorKind::OddDimension,
          "toral part of m is odd-dimensional; append a u(1)");
  CartanPairing out;
  if (hm.empty()) return out;
  RatMat gram = d.metric().toral_gram();
  RatMat ortho = gram_schmidt(hm, gram);
  for (std::size_t i = 0; i + 1 < ortho.size(); i += 2) {
    RatVec a = primitive(ortho[i]);
    RatVec b = primitive(ortho[i + 1]);
    out.first.push_back(a);
    out.second.push_back(b);
    out.ratio2.push_back(bilinear(a, gram, a) / bilinear(b, gram, b));
  }
  return out;
}

Endomorphism complex_structure(const CosetDecomposition& d, const PositivityAssignment& eps,
                               const CartanPairing& pairing) {
  int nsteps = 2 * (int)d.delta_m().size();
  int nt = (int)d.h_m().size();
  require(nt % 2 == 0, ErrorKind::OddDimension, "toral part of m is odd-dimensional");
  require((int)pairing.first.size() * 2 == nt, ErrorKind::PairingIncomplete,
          "pairing does not cover the toral part of m");
  Endomorphism I(d.m_dim());
  for (std::size_t s = 0; s < d.delta_m().size(); ++s) {
    int e = eps.eps.at(d.delta_m()[s]);
    I.set(2 * (int)s + 1, 2 * (int)s, Surd(Rat(-e)));  // I E+ = -eps E-
    I.set(2 * (int)s, 2 * (int)s + 1, Surd(Rat(e)));   // I E- = +eps E+
  }
  if (nt == 0) return I;

  // Express the pairing vectors in h_m row coordinates.
  int tdim = d.algebra().toral_dim();
  RatMat rows = d.h_m();
  RatMat rowsT(tdim, zero_vec(nt));
  for (int r = 0; r < nt; ++r)
    for (int c = 0; c < tdim; ++c) rowsT[c][r] = rows[r][c];
  auto in_hm_coords = [&](const RatVec& v) {
    // Solve rows^T x = v (overdetermined, consistent when v in span).
    RatMat m = rowsT;
    return solve(std::move(m), v);
  };
  int l = (int)pairing.first.size();
  RatMat p_cols;
  for (int i = 0; i < l; ++i) p_cols.push_back(in_hm_coords(pairing.first[i]));
  for (int i = 0; i < l; ++i) p_cols.push_back(in_hm_coords(pairing.second[i]));
  RatMat P(nt, zero_vec(nt));
  for (int c = 0; c < nt; ++c)
    for (int r = 0; r < nt; ++r) P[r][c] = p_cols[c][r];
  RatMat Pinv;
  try {
    Pinv = invert(P);
  } catch (const Error&) {
    fail(ErrorKind::PairingIncomplete, "pairing vectors do not span the toral part of m");
  }
  // I = P J0 P^-1 with J0 the weighted rotation by r_i.
  std::vector<Surd> r_i;
  for (const auto& q : pairing.ratio2) {
    require(q > 0, ErrorKind::DegenerateMetric, "non-positive pairing norm ratio");
    r_i.push_back(Surd::sqrt_of(q));
  }
  for (int col = 0; col < nt; ++col) {
    // J0 applied to P^-1 e_col, then P.
    std::vector<Surd> x(nt);
    for (int r = 0; r < nt; ++r) x[r] = Surd(Pinv[r][col]);
    std::vector<Surd> jx(nt);
    for (int i = 0; i < l; ++i) {
      jx[l + i] = r_i[i] * x[i];                 // J v_i = r_i w_i
      jx[i] = -(r_i[i].inverse()) * x[l + i];    // J w_i = -(1/r_i) v_i
    }
    for (int r = 0; r < nt; ++r) {
      Surd v;
      for (int k = 0; k < nt; ++k)
        if (!jx[k].is_zero() && P[r][k] != 0) v += jx[k] * Surd(P[r][k]);
      if (!v.is_zero()) I.set(nsteps + r, nsteps + col, v);
    }
  }
  return I;
}

CheckResult check_invariance(const CosetDecomposition& d, const Endomorphism& I) {
  // ad(k)-invariance: I([Z,X]_m) = [Z, I X]_m for every k basis vector.
  for (int j = 0; j < d.k_dim(); ++j) {
    SpRat z = d.k_vector(j);
    for (int i = 0; i < d.m_dim(); ++i) {
      auto [zx_m, zx_k] = d.split(d.algebra().bracket(z, d.m_vector(i)));
      (void)zx_k;
      // [Z, I X]_m with I X expanded over m basis vectors.
      std::map<int, Surd> rhs;
      for (const auto& [w, c] : I.column(i)) {
        auto [m_part, k_part] = d.split(d.algebra().bracket(z, d.m_vector(w)));
        (void)k_part;
        surd_axpy(rhs, c, m_part);
      }
      std::map<int, Surd> lhs;
      surd_axpy(lhs, Surd(Rat(1)), I.apply(zx_m));
      surd_axpy(lhs, Surd(Rat(-1)), surd_normalize(std::move(rhs)));
      if (!lhs.empty())
        return {false, "k index " + std::to_string(j) + ", m index " + std::to_string(i)};
    }
  }
  return {};
}

KTReport verify_kt(const CosetDecomposition& d, const Endomorphism& I) {
  KTReport rep;
  ProjectedBrackets pb = d.tangent_brackets();

  if (!I.compose(I).is_minus_identity()) {
    rep.square = {false, "I^2 != -1"};
    return rep;  // nothing downstream is meaningful
  }

  rep.invariance = check_invariance(d, I);

  Nijenhuis nj(I, pb);
  std::pair<int, int> w;
  if (!nj.vanishes(&w))
    rep.integrability = {false,
                         "N(e_" + std::to_string(w.first) + ", e_" + std::to_string(w.second) +
                             ") != 0"};

  auto gram = [&](int i, int j) { return d.gram_m(i, j); };
  auto hrep = hermitian(gram, I);
  if (!hrep.pass)
    rep.hermiticity = {false, "pair (" + std::to_string(hrep.violations[0].first) + ", " +
                                  std::to_string(hrep.violations[0].second) + ")"};

  AltForm h = torsion_form(pb);
  TypeProjector proj(I);
  std::vector<int> tw;
  if (!proj.part_vanishes(h, 3, &tw))
    rep.torsion_type = {false, "(3,0) component present"};
  else if (!proj.part_vanishes(h, 0, &tw))
    rep.torsion_type = {false, "(0,3) component present"};
  return rep;
}

}  // namespace homkt
