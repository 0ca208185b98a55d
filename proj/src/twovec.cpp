#include "lie2/twovec.hpp"

namespace lie2 {

namespace {

RatMatrix unflatten(const RatVector& v, Index offset, Index rows, Index cols) {
  RatMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = v(offset + r * cols + c);
  return m;
}

void check_shape(const RatMatrix& m, Index rows, Index cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) throw InputError(std::string(what) + " has the wrong shape");
}

}  // namespace

GlPhi glphi(const TwoVect& base) {
  check_shape(base.phi, base.v_dim, base.w_dim, "phi");
  const Index w = base.w_dim, v = base.v_dim, nF = w * w;
  // (phi F - f phi)(r, c) = sum_k phi(r,k) F(k,c) - sum_k f(r,k) phi(k,c)
  RatMatrix cons = RatMatrix::Zero(v * w, nF + v * v);
  for (Index r = 0; r < v; ++r)
    for (Index c = 0; c < w; ++c) {
      const Index row = r * w + c;
      for (Index k = 0; k < w; ++k) cons(row, k * w + c) += base.phi(r, k);
      for (Index k = 0; k < v; ++k) cons(row, nF + r * v + k) -= base.phi(k, c);
    }
  return {base, kernel_basis(cons)};
}

std::pair<RatMatrix, RatMatrix> GlPhi::object(Index i) const {
  const Index w = base.w_dim, v = base.v_dim;
  RatVector col = objects.basis.col(i);
  return {unflatten(col, 0, w, w), unflatten(col, w * w, v, v)};
}

RatVector GlPhi::flatten(const RatMatrix& F, const RatMatrix& f) const {
  const Index w = base.w_dim, v = base.v_dim;
  check_shape(F, w, w, "F");
  check_shape(f, v, v, "f");
  RatVector out(w * w + v * v);
  for (Index r = 0; r < w; ++r)
    for (Index c = 0; c < w; ++c) out(r * w + c) = F(r, c);
  for (Index r = 0; r < v; ++r)
    for (Index c = 0; c < v; ++c) out(w * w + r * v + c) = f(r, c);
  return out;
}

bool GlPhi::contains(const RatMatrix& F, const RatMatrix& f) const {
  return RatMatrix(base.phi * F) == RatMatrix(f * base.phi);
}

RatVector GlPhi::object_coords(const RatMatrix& F, const RatMatrix& f) const {
  if (!contains(F, f)) throw DomainError("(F, f) is not an object of gl(phi)");
  return *solve(objects.basis, flatten(F, f));
}

RatMatrix GlPhi::arrow(Index i) const {
  RatMatrix a = RatMatrix::Zero(base.w_dim, base.v_dim);
  a(i / base.v_dim, i % base.v_dim) = 1;
  return a;
}

std::pair<RatMatrix, RatMatrix> delta_map(const GlPhi& G, const RatMatrix& A) {
  check_shape(A, G.base.w_dim, G.base.v_dim, "A");
  std::pair<RatMatrix, RatMatrix> out{A * G.base.phi, G.base.phi * A};
  if (!G.contains(out.first, out.second)) throw DomainError("delta image left gl(phi)_0");
  return out;
}

RatMatrix bracket_phi(const GlPhi& G, const RatMatrix& A1, const RatMatrix& A2) {
  check_shape(A1, G.base.w_dim, G.base.v_dim, "A1");
  check_shape(A2, G.base.w_dim, G.base.v_dim, "A2");
  const RatMatrix& phi = G.base.phi;
  return A1 * phi * A2 - A2 * phi * A1;
}

RatMatrix action_phi(const GlPhi& G, const RatMatrix& F, const RatMatrix& f, const RatMatrix& A) {
  check_shape(A, G.base.w_dim, G.base.v_dim, "A");
  if (!G.contains(F, f)) throw DomainError("(F, f) is not an object of gl(phi)");
  return F * A - A * f;
}

CrossedModule glphi_as_crossed_module(const GlPhi& G) {
  const Index na = G.arrows_dim(), no = G.objects_dim();
  auto arrow_coords = [&](const RatMatrix& A) {
    RatVector v(na);
    for (Index r = 0; r < A.rows(); ++r)
      for (Index c = 0; c < A.cols(); ++c) v(r * A.cols() + c) = A(r, c);
    return v;
  };
  CrossedModule X;
  X.g = LieAlgebra(na);
  for (Index a = 0; a < na; ++a)
    for (Index b = a + 1; b < na; ++b) X.g.set_bracket(a, b, arrow_coords(bracket_phi(G, G.arrow(a), G.arrow(b))));
  X.h = LieAlgebra(no);
  for (Index a = 0; a < no; ++a)
    for (Index b = a + 1; b < no; ++b) {
      auto [Fa, fa] = G.object(a);
      auto [Fb, fb] = G.object(b);
      X.h.set_bracket(a, b, G.object_coords(Fa * Fb - Fb * Fa, fa * fb - fb * fa));
    }
  X.mu = RatMatrix(no, na);
  for (Index a = 0; a < na; ++a) {
    auto [F, f] = delta_map(G, G.arrow(a));
    X.mu.col(a) = G.object_coords(F, f);
  }
  for (Index o = 0; o < no; ++o) {
    auto [F, f] = G.object(o);
    RatMatrix L(na, na);
    for (Index a = 0; a < na; ++a) L.col(a) = arrow_coords(action_phi(G, F, f, G.arrow(a)));
    X.action.push_back(L);
  }
  return X;
}

GlArrow horizontal_composition(const GlPhi& G, const GlArrow& first, const GlArrow& second) {
  const RatMatrix& phi = G.base.phi;
  check_shape(first.A, G.base.w_dim, G.base.v_dim, "A");
  check_shape(second.A, G.base.w_dim, G.base.v_dim, "B");
  return {second.A * first.f + second.A * phi * first.A + second.F * first.A, second.F * first.F,
          second.f * first.f};
}

}  // namespace lie2
