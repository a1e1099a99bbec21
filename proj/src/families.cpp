#include "walker/families.hpp"

#include <string>

namespace walker {

namespace {

void require_x34_only(const ScalarField& f, const char* name) {
  if (f.depends_on(1) || f.depends_on(2)) {
    throw CoefficientError(std::string("coefficient ") + name +
                           " must be a function of (x3, x4) only");
  }
}

ScalarField x(int axis) { return ScalarField::coordinate(axis); }

}  // namespace

WalkerMetric make_selfdual(const SelfDualCoefficients& c) {
  const std::pair<const ScalarField*, const char*> fields[] = {
      {&c.calA, "calA"}, {&c.calB, "calB"}, {&c.calC, "calC"},
      {&c.calD, "calD"}, {&c.calE, "calE"}, {&c.calF, "calF"},
      {&c.P, "P"},       {&c.Q, "Q"},       {&c.S, "S"},
      {&c.T, "T"},       {&c.U, "U"},       {&c.V, "V"},
      {&c.xi, "xi"},     {&c.eta, "eta"},   {&c.gam, "gam"}};
  for (const auto& [f, name] : fields) require_x34_only(*f, name);

  const ScalarField x1 = x(1), x2 = x(2);
  const ScalarField half(0.5);

  ScalarField a = x1 * x1 * x1 * c.calA + x1 * x1 * c.calB +
                  x1 * x1 * x2 * c.calC + x1 * x2 * c.calD + x1 * c.P +
                  x2 * c.Q + c.xi;
  ScalarField b = x2 * x2 * x2 * c.calC + x2 * x2 * c.calE +
                  x1 * x2 * x2 * c.calA + x1 * x2 * c.calF + x1 * c.S +
                  x2 * c.T + c.eta;
  ScalarField cc = half * x1 * x1 * c.calF + half * x2 * x2 * c.calD +
                   x1 * x1 * x2 * c.calA + x1 * x2 * x2 * c.calC +
                   half * x1 * x2 * (c.calB + c.calE) + x1 * c.U + x2 * c.V +
                   c.gam;
  return WalkerMetric(a, b, cc);
}

WalkerMetric make_typeII(const TypeIICoefficients& c) {
  if (c.tau == 0.0) {
    throw CoefficientError("the nonzero-scalar-curvature family needs tau != 0");
  }
  const std::pair<const ScalarField*, const char*> fields[] = {
      {&c.P, "P"}, {&c.Q, "Q"}, {&c.S, "S"},
      {&c.T, "T"}, {&c.U, "U"}, {&c.V, "V"}};
  for (const auto& [f, name] : fields) require_x34_only(*f, name);

  const ScalarField x1 = x(1), x2 = x(2);
  const ScalarField t6(c.tau / 6.0);
  const ScalarField s(6.0 / c.tau);
  const ScalarField two(2.0);

  const ScalarField q4 = c.Q.derivative(4), v3 = c.V.derivative(3);
  const ScalarField s3 = c.S.derivative(3), u4 = c.U.derivative(4);
  const ScalarField t3 = c.T.derivative(3), u3 = c.U.derivative(3);
  const ScalarField p4 = c.P.derivative(4), v4 = c.V.derivative(4);

  ScalarField a =
      x1 * x1 * t6 + x1 * c.P + x2 * c.Q +
      s * (c.Q * (c.T - c.U) + c.V * (c.P - c.V) - two * (q4 - v3));
  ScalarField b =
      x2 * x2 * t6 + x1 * c.S + x2 * c.T +
      s * (c.S * (c.P - c.V) + c.U * (c.T - c.U) - two * (s3 - u4));
  ScalarField cc = x1 * x2 * t6 + x1 * c.U + x2 * c.V +
                   s * (-(c.Q * c.S) + c.U * c.V + t3 - u3 + p4 - v4);
  return WalkerMetric(a, b, cc);
}

RicciFlatFamily make_ricciflat_selfdual(
    const ScalarField& P, const ScalarField& Q, const ScalarField& S,
    const ScalarField& T, const ScalarField& U, const ScalarField& V,
    const ScalarField& xi, const ScalarField& eta, const ScalarField& gam) {
  const std::pair<const ScalarField*, const char*> fields[] = {
      {&P, "P"},   {&Q, "Q"},     {&S, "S"},   {&T, "T"},  {&U, "U"},
      {&V, "V"},   {&xi, "xi"},   {&eta, "eta"}, {&gam, "gam"}};
  for (const auto& [f, name] : fields) require_x34_only(*f, name);

  const ScalarField x1 = x(1), x2 = x(2);
  const ScalarField two(2.0);

  ScalarField a = x1 * P + x2 * Q + xi;
  ScalarField b = x1 * S + x2 * T + eta;
  ScalarField cc = x1 * U + x2 * V + gam;

  RicciFlatFamily out{WalkerMetric(a, b, cc), {}};
  out.residuals[0] = two * (Q.derivative(4) - V.derivative(3)) -
                     (Q * (T - U) + V * (P - V));
  out.residuals[1] = two * (S.derivative(3) - U.derivative(4)) -
                     (S * (P - V) + U * (T - U));
  out.residuals[2] = (T.derivative(3) - U.derivative(3) + P.derivative(4) -
                      V.derivative(4)) -
                     (Q * S - U * V);
  return out;
}

StrictFamily make_strict(const ScalarField& a3, const ScalarField& b3,
                         const ScalarField& c3) {
  require_x34_only(a3, "a");
  require_x34_only(b3, "b");
  require_x34_only(c3, "c");
  StrictFamily out{WalkerMetric(a3, b3, c3),
                   ScalarField(2.0) * c3.derivative(3).derivative(4) -
                       a3.derivative(4).derivative(4) -
                       b3.derivative(3).derivative(3)};
  return out;
}

Mat4 ParaKahlerFamily::J(const Point& p) const {
  const double av = metric.a()(p);
  const double bv = metric.b()(p);
  const double cv = metric.c()(p);
  Mat4 j{};
  j[0][0] = -1.0;
  j[1][1] = -1.0;
  j[0][2] = -av;
  j[1][2] = -cv;
  j[2][2] = 1.0;
  j[0][3] = -cv;
  j[1][3] = -bv;
  j[3][3] = 1.0;
  return j;
}

ParaKahlerFamily make_parakahler(double alpha) {
  const ScalarField x1 = x(1), x2 = x(2);
  const ScalarField al(alpha);
  return ParaKahlerFamily{
      WalkerMetric(x1 * x1 * al, x2 * x2 * al, x1 * x2 * al), alpha};
}

WalkerMetric make_antiselfdual_example() {
  const ScalarField x1 = x(1), x2 = x(2);
  const ScalarField f =
      x1 * x1 + x2 * x2 - ScalarField(2.0) * x1 * x2;
  return WalkerMetric(f, f, f);
}

}  // namespace walker
