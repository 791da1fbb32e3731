#include "coalglab/localization.hpp"

#include <algorithm>
#include <set>

namespace coalglab {

namespace {

// express v in the row basis of s (must be a member)
std::vector<Scalar> coords_in(const Subspace& s, const std::vector<Scalar>& v) {
  return s.coordinates(v);
}

}  // namespace

IdempotentPresentation lift_idempotent(const CoalgebraPtr& c,
                                       const std::vector<std::string>& keep) {
  auto gl = c->grouplikes();
  if (!gl.pointed) throw input_error("lift_idempotent: coalgebra is not pointed");
  std::set<std::string> keep_set(keep.begin(), keep.end());
  for (const auto& k : keep_set) {
    bool known = false;
    for (const auto& l : gl.labels) known = known || l == k;
    if (!known) throw input_error("lift_idempotent: unknown vertex label " + k);
  }
  Field f = c->field();
  std::size_t n = c->dim();
  Subspace c0 = c->coradical();
  // e0: prescribed values on the coradical, 0 on a coordinate complement
  std::vector<bool> is_piv(n, false);
  {
    auto rr = c0.basis().rref();
    for (std::size_t p : rr.pivots) is_piv[p] = true;
  }
  Matrix sys(f, n, n);
  std::vector<Scalar> rhs(n, Scalar::zero(f));
  std::size_t row = 0;
  for (std::size_t g = 0; g < gl.elements.size(); ++g) {
    for (std::size_t col = 0; col < n; ++col) sys.at(row, col) = gl.elements[g][col];
    rhs[row] = keep_set.count(gl.labels[g]) ? Scalar::one(f) : Scalar::zero(f);
    ++row;
  }
  for (std::size_t col = 0; col < n; ++col) {
    if (is_piv[col]) continue;
    sys.at(row, col) = Scalar::one(f);
    rhs[row] = Scalar::zero(f);
    ++row;
  }
  std::vector<Scalar> e;
  if (!sys.solve(rhs, e)) throw std::logic_error("lift_idempotent: seed system is singular");
  // Newton-style lift until exactly idempotent
  for (int iter = 0; iter < 64; ++iter) {
    auto e2 = c->convolve(e, e);
    if (e2 == e) {
      IdempotentPresentation p;
      p.coalgebra = c;
      p.keep.assign(keep_set.begin(), keep_set.end());
      p.e = e;
      return p;
    }
    // e <- 3e^2 - 2e^3
    auto e3 = c->convolve(e2, e);
    for (std::size_t i = 0; i < n; ++i)
      e[i] = Scalar::of_int(f, 3) * e2[i] - Scalar::of_int(f, 2) * e3[i];
  }
  throw std::logic_error("lift_idempotent: iteration did not converge");
}

LocalizedCoalgebra localize_coalgebra(const IdempotentPresentation& p) {
  const Coalgebra& c = *p.coalgebra;
  Field f = c.field();
  std::size_t n = c.dim();
  // pi(b_i) = sum e(c1) c2 e(c3)
  Matrix pi(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto d2 = c.delta2_of(c.basis_vector(i));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& v = d2[(a * n + b) * n + k];
          if (!v.is_zero() && !p.e[a].is_zero() && !p.e[k].is_zero())
            pi.at(b, i) += v * p.e[a] * p.e[k];
        }
  }
  Subspace image = Subspace::from_rows(pi.transpose());
  std::size_t m = image.dim();
  // comultiplication: Delta_{eCe}(x) = (pi (x) pi)(Delta x) for x in the image
  Matrix tensor_rows(f, m * m, n * n);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto ra = image.basis().row(a);
      auto rb = image.basis().row(b);
      for (std::size_t j = 0; j < n; ++j)
        if (!ra[j].is_zero())
          for (std::size_t k = 0; k < n; ++k)
            if (!rb[k].is_zero()) tensor_rows.at(a * m + b, j * n + k) = ra[j] * rb[k];
    }
  Matrix tensor_t = tensor_rows.transpose();
  std::vector<std::vector<DeltaTerm>> delta(m);
  for (std::size_t s = 0; s < m; ++s) {
    auto dx = c.delta_of(image.basis().row(s));
    // apply pi to both legs
    std::vector<Scalar> w(n * n, Scalar::zero(f));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& v = dx[a * n + b];
        if (v.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (pi.at(j, a).is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (!pi.at(k, b).is_zero()) w[j * n + k] += v * pi.at(j, a) * pi.at(k, b);
        }
      }
    std::vector<Scalar> coords;
    if (!tensor_t.solve(w, coords))
      throw std::logic_error("localize_coalgebra: Delta does not restrict to eCe");
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (!coords[a * m + b].is_zero()) delta[s].push_back({a, b, coords[a * m + b]});
  }
  std::vector<Scalar> counit(m, Scalar::zero(f));
  for (std::size_t s = 0; s < m; ++s) counit[s] = c.counit_of(image.basis().row(s));
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < m; ++s) labels.push_back("l" + std::to_string(s));
  LocalizedCoalgebra out;
  out.ece = std::make_shared<Coalgebra>(f, std::move(labels), std::move(delta),
                                        std::move(counit));
  out.image = std::move(image);
  out.pi = std::move(pi);
  return out;
}

LocalizedComodule localize_comodule(const IdempotentPresentation& p,
                                    const LocalizedCoalgebra& loc, const Comodule& m) {
  Field f = m.field();
  std::size_t md = m.dim(), n = p.coalgebra->dim();
  Matrix ae = m.action_of(p.e);
  Subspace me = Subspace::from_rows(ae.transpose());
  std::size_t k = me.dim();
  Matrix me_t = me.basis().transpose();
  std::vector<std::vector<RhoTerm>> rho(k);
  for (std::size_t s = 0; s < k; ++s) {
    auto img = m.rho_of(me.basis().row(s));  // C (x) M
    // first leg through pi, second leg through the action of e
    std::vector<Scalar> w(n * md, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < md; ++t) {
        const Scalar& v = img[i * md + t];
        if (v.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (loc.pi.at(j, i).is_zero()) continue;
          for (std::size_t u = 0; u < md; ++u)
            if (!ae.at(u, t).is_zero()) w[j * md + u] += v * loc.pi.at(j, i) * ae.at(u, t);
        }
      }
    // second legs into Me coordinates, then first legs into eCe coordinates
    std::vector<std::vector<Scalar>> by_c(n, std::vector<Scalar>(k, Scalar::zero(f)));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> leg(md, Scalar::zero(f));
      bool nz = false;
      for (std::size_t t = 0; t < md; ++t) {
        leg[t] = w[i * md + t];
        nz = nz || !leg[t].is_zero();
      }
      if (!nz) continue;
      std::vector<Scalar> coords;
      if (!me_t.solve(leg, coords))
        throw std::logic_error("localize_comodule: image leg escapes Me");
      by_c[i] = coords;
    }
    // now express the C legs: the vector sum_i b_i (x) by_c[i] with first legs
    // guaranteed in the eCe image subspace
    for (std::size_t u = 0; u < k; ++u) {
      std::vector<Scalar> cleg(n, Scalar::zero(f));
      bool nz = false;
      for (std::size_t i = 0; i < n; ++i) {
        cleg[i] = by_c[i][u];
        nz = nz || !cleg[i].is_zero();
      }
      if (!nz) continue;
      auto ccoords = coords_in(loc.image, cleg);
      for (std::size_t a = 0; a < ccoords.size(); ++a)
        if (!ccoords[a].is_zero()) rho[s].push_back({a, u, ccoords[a]});
    }
  }
  LocalizedComodule out{Comodule(loc.ece, k, std::move(rho)), std::move(me),
                        Matrix(f, 0, 0)};
  // to_local: coordinates of x.e in the Me basis
  Matrix tl(f, k, md);
  for (std::size_t c = 0; c < md; ++c) {
    std::vector<Scalar> e(md, Scalar::zero(f));
    e[c] = Scalar::one(f);
    auto img = ae.apply(e);
    std::vector<Scalar> coords;
    if (!me_t.solve(img, coords)) throw std::logic_error("localize_comodule: to_local failed");
    for (std::size_t r = 0; r < k; ++r) tl.at(r, c) = coords[r];
  }
  out.to_local = std::move(tl);
  return out;
}

Bicomodule ec_bicomodule(const IdempotentPresentation& p, const LocalizedCoalgebra& loc) {
  const Coalgebra& c = *p.coalgebra;
  Field f = c.field();
  std::size_t n = c.dim();
  // eC = e -> C = { sum c1 e(c2) }: operator on C coordinates
  Matrix le(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& t : c.delta()[i])
      if (!p.e[t.k].is_zero()) le.at(t.j, i) += t.coeff * p.e[t.k];
  Subspace ec = Subspace::from_rows(le.transpose());
  std::size_t m = ec.dim();
  Matrix ec_t = ec.basis().transpose();
  // left C-coaction: Delta restricted (second leg stays in eC)
  std::vector<std::vector<RhoTerm>> lrho(m);
  for (std::size_t s = 0; s < m; ++s) {
    auto dx = c.delta_of(ec.basis().row(s));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Scalar> leg(n, Scalar::zero(f));
      bool nz = false;
      for (std::size_t b = 0; b < n; ++b) {
        leg[b] = dx[i * n + b];
        nz = nz || !leg[b].is_zero();
      }
      if (!nz) continue;
      std::vector<Scalar> coords;
      if (!ec_t.solve(leg, coords))
        throw std::logic_error("ec_bicomodule: Delta does not corestrict to eC");
      for (std::size_t u = 0; u < m; ++u)
        if (!coords[u].is_zero()) lrho[s].push_back({i, u, coords[u]});
    }
  }
  Comodule left(p.coalgebra, m, std::move(lrho));
  // right eCe-coaction: x -> sum (e -> x1) (x) (e -> x2 <- e)
  std::vector<std::vector<RightRhoTerm>> rrho(m);
  for (std::size_t s = 0; s < m; ++s) {
    auto dx = c.delta_of(ec.basis().row(s));
    // apply le to first leg and pi to second leg
    std::vector<std::vector<Scalar>> by_second(n, std::vector<Scalar>(n, Scalar::zero(f)));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar& v = dx[a * n + b];
        if (v.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (le.at(j, a).is_zero()) continue;
          for (std::size_t k2 = 0; k2 < n; ++k2)
            if (!loc.pi.at(k2, b).is_zero())
              by_second[j][k2] += v * le.at(j, a) * loc.pi.at(k2, b);
        }
      }
    // first legs into eC coordinates per second-leg C index
    std::vector<std::vector<Scalar>> first_coords(n);
    for (std::size_t k2 = 0; k2 < n; ++k2) {
      std::vector<Scalar> leg(n, Scalar::zero(f));
      bool nz = false;
      for (std::size_t j = 0; j < n; ++j) {
        leg[j] = by_second[j][k2];
        nz = nz || !leg[j].is_zero();
      }
      if (!nz) continue;
      std::vector<Scalar> coords;
      if (!ec_t.solve(leg, coords))
        throw std::logic_error("ec_bicomodule: right coaction first leg escapes eC");
      first_coords[k2] = coords;
    }
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<Scalar> cleg(n, Scalar::zero(f));
      bool nz = false;
      for (std::size_t k2 = 0; k2 < n; ++k2) {
        if (first_coords[k2].empty()) continue;
        cleg[k2] = first_coords[k2][t];
        nz = nz || !cleg[k2].is_zero();
      }
      if (!nz) continue;
      auto ccoords = coords_in(loc.image, cleg);
      for (std::size_t a = 0; a < ccoords.size(); ++a)
        if (!ccoords[a].is_zero()) rrho[s].push_back({t, a, ccoords[a]});
    }
  }
  RightComodule right(loc.ece, m, std::move(rrho));
  return Bicomodule{std::move(left), std::move(right)};
}

Comodule section_S(const IdempotentPresentation& p, const LocalizedCoalgebra& loc,
                   const Comodule& n) {
  Bicomodule ec = ec_bicomodule(p, loc);
  return cotensor_left(ec, n);
}

TSReport verify_TS_identity(const IdempotentPresentation& p, const LocalizedCoalgebra& loc,
                            const std::vector<Comodule>& samples) {
  TSReport rep;
  Bicomodule ec = ec_bicomodule(p, loc);
  const Coalgebra& c = *p.coalgebra;
  Field f = c.field();
  // recover eC basis rows in C coordinates for counit evaluation
  Matrix le(f, c.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (const auto& t : c.delta()[i])
      if (!p.e[t.k].is_zero()) le.at(t.j, i) += t.coeff * p.e[t.k];
  Subspace ec_space = Subspace::from_rows(le.transpose());
  std::vector<Comodule> sections;
  for (std::size_t si = 0; si < samples.size(); ++si) {
    const Comodule& n = samples[si];
    Subspace w = cotensor(ec.right, n);
    Comodule sn = cotensor_left(ec, n);
    sections.push_back(sn);
    LocalizedComodule tsn = localize_comodule(p, loc, sn);
    // natural map TS(n) -> n: counit evaluation on the eC leg
    std::size_t m = ec_space.dim();
    Matrix nat(f, n.dim(), tsn.comodule.dim());
    for (std::size_t col = 0; col < tsn.comodule.dim(); ++col) {
      // TS basis element in S(n) coordinates, then in eC (x) N coordinates
      auto in_sn = tsn.image.basis().row(col);
      std::vector<Scalar> in_ecn(m * n.dim(), Scalar::zero(f));
      for (std::size_t s = 0; s < w.dim(); ++s)
        if (!in_sn[s].is_zero())
          for (std::size_t idx = 0; idx < m * n.dim(); ++idx)
            in_ecn[idx] += in_sn[s] * w.basis().at(s, idx);
      for (std::size_t s = 0; s < m; ++s) {
        Scalar eps = c.counit_of(ec_space.basis().row(s));
        if (eps.is_zero()) continue;
        for (std::size_t u = 0; u < n.dim(); ++u)
          nat.at(u, col) += eps * in_ecn[s * n.dim() + u];
      }
    }
    bool ok = tsn.comodule.dim() == n.dim() && nat.invertible();
    if (ok) {
      // morphism property over eCe
      const auto& an = n.action_matrices();
      const auto& at = tsn.comodule.action_matrices();
      for (std::size_t i = 0; i < loc.ece->dim() && ok; ++i)
        ok = an[i] * nat == nat * at[i];
    }
    rep.ok = rep.ok && ok;
    rep.lines.push_back("TS(sample " + std::to_string(si) + "): dim " +
                        std::to_string(tsn.comodule.dim()) + " vs " + std::to_string(n.dim()) +
                        (ok ? " natural map is an isomorphism" : " FAILED"));
  }
  // Hom-dimension preservation of S on sample pairs
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j) {
      std::size_t lhs = hom_space(samples[i], samples[j]).size();
      std::size_t rhs = hom_space(sections[i], sections[j]).size();
      bool ok = lhs == rhs;
      rep.ok = rep.ok && ok;
      rep.lines.push_back("dim Hom(n_" + std::to_string(i) + ", n_" + std::to_string(j) +
                          ") = " + std::to_string(lhs) + ", dim Hom(S n_" + std::to_string(i) +
                          ", S n_" + std::to_string(j) + ") = " + std::to_string(rhs) +
                          (ok ? "" : " MISMATCH"));
    }
  return rep;
}

Comodule left_adjoint_H(const IdempotentPresentation& p, const LocalizedCoalgebra& loc,
                        const Comodule& n) {
  // H(N) = N (x)_{eC*e} eC*, realized on coordinates; experimental
  const Coalgebra& c = *p.coalgebra;
  Field f = c.field();
  std::size_t cn = c.dim();
  StructureAlgebra dual = c.dual_algebra();
  // eC* = e * C*: left ideal; basis rows in C* coordinates
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < cn; ++i) {
    std::vector<Scalar> ei(cn, Scalar::zero(f));
    ei[i] = Scalar::one(f);
    rows.push_back(dual.multiply(p.e, ei));
  }
  Subspace ecs = Subspace::from_vectors(f, cn, rows);
  // eC*e basis
  std::vector<std::vector<Scalar>> rows2;
  for (std::size_t r = 0; r < ecs.dim(); ++r)
    rows2.push_back(dual.multiply(ecs.basis().row(r), p.e));
  Subspace ecse = Subspace::from_vectors(f, cn, rows2);
  // right (eCe)^* = eC*e action on N: a acts as the action of a|_{eCe};
  // N's action matrices are indexed by eCe dual basis, so convert: the
  // functional a in C^* restricts to eCe via values on the image basis
  auto act_on_n = [&](const std::vector<Scalar>& a) {
    std::vector<Scalar> restricted(loc.ece->dim(), Scalar::zero(f));
    for (std::size_t s = 0; s < loc.image.dim(); ++s) {
      Scalar v = Scalar::zero(f);
      for (std::size_t i = 0; i < cn; ++i)
        if (!loc.image.basis().at(s, i).is_zero()) v += loc.image.basis().at(s, i) * a[i];
      restricted[s] = v;
    }
    return n.action_of(restricted);
  };
  std::size_t nd = n.dim(), es = ecs.dim(), ese = ecse.dim();
  // relations: n.a (x) b - n (x) a*b over a in eC*e, b in eC*
  std::size_t full = nd * es;
  std::vector<std::vector<Scalar>> rel;
  Matrix ecs_t = ecs.basis().transpose();
  for (std::size_t ai = 0; ai < ese; ++ai) {
    auto a = ecse.basis().row(ai);
    Matrix an = act_on_n(a);
    for (std::size_t bi = 0; bi < es; ++bi) {
      auto ab = dual.multiply(a, ecs.basis().row(bi));
      std::vector<Scalar> ab_coords;
      if (!ecs_t.solve(ab, ab_coords)) throw std::logic_error("left_adjoint_H: a*b escapes eC*");
      for (std::size_t u = 0; u < nd; ++u) {
        std::vector<Scalar> r(full, Scalar::zero(f));
        // (n_u . a) (x) b_bi
        for (std::size_t t = 0; t < nd; ++t)
          if (!an.at(t, u).is_zero()) r[t * es + bi] += an.at(t, u);
        // - n_u (x) (a * b)
        for (std::size_t t2 = 0; t2 < es; ++t2)
          if (!ab_coords[t2].is_zero()) r[u * es + t2] -= ab_coords[t2];
        rel.push_back(std::move(r));
      }
    }
  }
  Subspace relations = Subspace::from_vectors(f, full, rel);
  // quotient space coordinates
  std::vector<bool> is_piv(full, false);
  {
    auto rr = relations.basis().rref();
    for (std::size_t piv : rr.pivots) is_piv[piv] = true;
  }
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < full; ++i)
    if (!is_piv[i]) comp.push_back(i);
  std::size_t hd = comp.size();
  auto project = [&](const std::vector<Scalar>& v) {
    auto red = relations.reduce(v);
    std::vector<Scalar> out(hd, Scalar::zero(f));
    for (std::size_t i = 0; i < hd; ++i) out[i] = red[comp[i]];
    return out;
  };
  // right C*-action on H(N): (n (x) b) . g = n (x) (b * g); coaction from the
  // dual-basis action matrices (rational by construction at finite dimension)
  std::vector<std::vector<RhoTerm>> rho(hd);
  for (std::size_t r = 0; r < hd; ++r) {
    std::vector<Scalar> lift(full, Scalar::zero(f));
    lift[comp[r]] = Scalar::one(f);
    for (std::size_t gi = 0; gi < cn; ++gi) {
      std::vector<Scalar> g(cn, Scalar::zero(f));
      g[gi] = Scalar::one(f);
      std::vector<Scalar> img(full, Scalar::zero(f));
      for (std::size_t u = 0; u < nd; ++u)
        for (std::size_t bi = 0; bi < es; ++bi) {
          const Scalar& v = lift[u * es + bi];
          if (v.is_zero()) continue;
          auto bg = dual.multiply(ecs.basis().row(bi), g);
          std::vector<Scalar> bg_coords;
          if (!ecs_t.solve(bg, bg_coords))
            throw std::logic_error("left_adjoint_H: b*g escapes eC*");
          for (std::size_t t2 = 0; t2 < es; ++t2)
            if (!bg_coords[t2].is_zero()) img[u * es + t2] += v * bg_coords[t2];
        }
      auto pimg = project(img);
      for (std::size_t t = 0; t < hd; ++t)
        if (!pimg[t].is_zero()) rho[r].push_back({gi, t, pimg[t]});
    }
  }
  Comodule h(p.coalgebra, hd, std::move(rho));
  auto chk = h.check();
  if (!chk.ok)
    throw std::logic_error("left_adjoint_H: induced module is not rational on this input");
  return h;
}

}  // namespace coalglab
