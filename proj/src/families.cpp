#include "superein/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace superein {

// ---------------------------------------------------------------------------
// Specs

std::string to_string(FamilyKind kind)
{
  switch (kind) {
  case FamilyKind::A: return "A";
  case FamilyKind::Ann: return "Ann";
  case FamilyKind::B: return "B";
  case FamilyKind::C: return "C";
  case FamilyKind::D: return "D";
  case FamilyKind::Dn1n: return "Dn1n";
  case FamilyKind::D21alpha: return "D21alpha";
  case FamilyKind::F4: return "F4";
  case FamilyKind::G3: return "G3";
  }
  return "?";
}

std::string to_string(FormKind kind)
{
  switch (kind) {
  case FormKind::Killing: return "killing";
  case FormKind::Case2: return "case2";
  case FormKind::Case6: return "case6";
  case FormKind::Case7: return "case7";
  }
  return "?";
}

FormKind form_kind_from_string(const std::string& s)
{
  if (s == "killing" || s == "K") {
    return FormKind::Killing;
  }
  if (s == "case2") {
    return FormKind::Case2;
  }
  if (s == "case6") {
    return FormKind::Case6;
  }
  if (s == "case7") {
    return FormKind::Case7;
  }
  throw InputError("unknown form '" + s + "' (expected killing, case2, case6 or case7)");
}

namespace {

std::string format_alpha(double alpha)
{
  std::ostringstream os;
  os.precision(15);
  os << alpha;
  return os.str();
}

} // namespace

FamilySpec FamilySpec::make(const std::string& letter, int m, int n, double alpha)
{
  FamilySpec s;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) {
      throw InputError(letter + "(" + std::to_string(m) + "," + std::to_string(n) + "): " + what);
    }
  };
  if (letter == "A") {
    need(m >= 0 && n >= 0, "requires m, n >= 0");
    need(!(m == 0 && n == 0), "A(0,0) = psl(1|1) is not simple; use n >= 1");
    s.kind = m == n ? FamilyKind::Ann : FamilyKind::A;
    s.m = m;
    s.n = n;
  } else if (letter == "B") {
    need(m >= 0 && n > 0, "requires m >= 0, n > 0");
    s.kind = FamilyKind::B;
    s.m = m;
    s.n = n;
  } else if (letter == "C") {
    need(n >= 3, "C(n) requires n >= 3");
    s.kind = FamilyKind::C;
    s.n = n;
  } else if (letter == "D") {
    need(m >= 2 && n > 0, "requires m >= 2, n > 0");
    if (m == 2 && n == 1) {
      s.kind = FamilyKind::D21alpha;
      s.alpha = 1.0;
    } else {
      s.kind = m - n == 1 ? FamilyKind::Dn1n : FamilyKind::D;
      s.m = m;
      s.n = n;
    }
  } else if (letter == "D21a" || letter == "D21alpha") {
    if (!std::isfinite(alpha) || alpha == 0.0 || alpha == -1.0) {
      throw InputError("D(2,1;alpha) requires a finite alpha not in {0, -1}");
    }
    s.kind = FamilyKind::D21alpha;
    s.alpha = alpha;
  } else if (letter == "F4") {
    s.kind = FamilyKind::F4;
  } else if (letter == "G3") {
    s.kind = FamilyKind::G3;
  } else {
    throw InputError("unknown family '" + letter + "' (expected A, B, C, D, D21a, F4, G3)");
  }
  return s;
}

std::string FamilySpec::name() const
{
  const auto pair = [&](int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
  switch (kind) {
  case FamilyKind::A:
  case FamilyKind::Ann: return "A" + pair(m, n);
  case FamilyKind::B: return "B" + pair(m, n);
  case FamilyKind::C: return "C(" + std::to_string(n) + ")";
  case FamilyKind::D:
  case FamilyKind::Dn1n: return "D" + pair(m, n);
  case FamilyKind::D21alpha: return "D(2,1;" + format_alpha(alpha) + ")";
  case FamilyKind::F4: return "F(4)";
  case FamilyKind::G3: return "G(3)";
  }
  return "?";
}

std::string FamilySpec::letter() const
{
  switch (kind) {
  case FamilyKind::A:
  case FamilyKind::Ann: return "A";
  case FamilyKind::B: return "B";
  case FamilyKind::C: return "C";
  case FamilyKind::D:
  case FamilyKind::Dn1n: return "D";
  case FamilyKind::D21alpha: return "D21a";
  case FamilyKind::F4: return "F4";
  case FamilyKind::G3: return "G3";
  }
  return "?";
}

bool FamilySpec::realizable() const
{
  if (kind == FamilyKind::F4 || kind == FamilyKind::G3) {
    return false;
  }
  if (kind == FamilyKind::D21alpha) {
    return alpha == 1.0;
  }
  return true;
}

nlohmann::json spec_to_json(const FamilySpec& spec)
{
  return {{"kind", spec.letter()}, {"m", spec.m}, {"n", spec.n}, {"alpha", spec.alpha}};
}

FamilySpec spec_from_json(const nlohmann::json& doc)
{
  try {
    return FamilySpec::make(doc.at("kind").get<std::string>(), doc.value("m", 0), doc.value("n", 0),
                            doc.value("alpha", 1.0));
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("spec_from_json: ") + ex.what());
  }
}

// ---------------------------------------------------------------------------
// Tabulated data

std::vector<std::string> FamilyData::variable_names() const
{
  std::vector<std::string> out;
  const std::size_t offset = has_k0 ? 0 : 1;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    out.push_back("x" + std::to_string(i + offset));
  }
  return out;
}

Rational gamma_sum(const FamilyData& data)
{
  Rational total = 0;
  for (const auto& id : data.ideals) {
    total += id.gamma;
  }
  return total;
}

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

IdealData simple_ideal(std::string name, std::size_t dim, const Rational& l)
{
  IdealData d;
  d.name = std::move(name);
  d.kind = IdealKind::Simple;
  d.dim = dim;
  d.l = l;
  return d;
}

void finish_gammas(FamilyData& data)
{
  const Rational dim_odd(static_cast<long>(data.dim_odd));
  for (auto& id : data.ideals) {
    if (id.kind == IdealKind::Abelian) {
      // Only B = K has a k_0 here.
      id.gamma = -Rational(static_cast<long>(id.dim)) / dim_odd;
      continue;
    }
    if (data.form == FormKind::Killing) {
      id.b = 1 - id.l;
    }
    id.gamma = id.l * Rational(static_cast<long>(id.dim)) / (id.b * dim_odd);
    id.gamma.canonicalize();
  }
}

} // namespace

FamilyData family_data(const FamilySpec& spec)
{
  FamilyData data;
  data.spec = spec;
  const long m = spec.m;
  const long n = spec.n;
  switch (spec.kind) {
  case FamilyKind::A: {
    data.has_k0 = true;
    IdealData k0;
    k0.name = "C";
    k0.kind = IdealKind::Abelian;
    k0.dim = 1;
    data.ideals.push_back(k0);
    if (m > 0) {
      data.ideals.push_back(simple_ideal("sl(" + std::to_string(m + 1) + ")", (m + 1) * (m + 1) - 1, q(n + 1, m + 1)));
    }
    if (n > 0) {
      data.ideals.push_back(simple_ideal("sl(" + std::to_string(n + 1) + ")", (n + 1) * (n + 1) - 1, q(m + 1, n + 1)));
    }
    data.dim_odd = 2 * (m + 1) * (n + 1);
    break;
  }
  case FamilyKind::Ann: {
    data.form = FormKind::Case2;
    data.killing_nondegenerate = false;
    const std::size_t d = (n + 1) * (n + 1) - 1;
    const std::string nm = "sl(" + std::to_string(n + 1) + ")";
    data.ideals.push_back(simple_ideal(nm + "_1", d, q(1)));
    data.ideals.push_back(simple_ideal(nm + "_2", d, q(1)));
    data.ideals[0].b = q(1);
    data.ideals[1].b = q(-1);
    data.dim_odd = 2 * (n + 1) * (n + 1);
    break;
  }
  case FamilyKind::B: {
    if (m > 0) {
      data.ideals.push_back(simple_ideal("so(" + std::to_string(2 * m + 1) + ")", m * (2 * m + 1), q(2 * n, 2 * m - 1)));
    }
    data.ideals.push_back(simple_ideal("sp(" + std::to_string(2 * n) + ")", n * (2 * n + 1), q(2 * m + 1, 2 * n + 2)));
    data.dim_odd = 2 * n * (2 * m + 1);
    break;
  }
  case FamilyKind::C: {
    data.has_k0 = true;
    IdealData k0;
    k0.name = "so(2)";
    k0.kind = IdealKind::Abelian;
    k0.dim = 1;
    data.ideals.push_back(k0);
    data.ideals.push_back(simple_ideal("sp(" + std::to_string(2 * n - 2) + ")", (n - 1) * (2 * n - 1), q(1, n)));
    data.dim_odd = 4 * (n - 1);
    break;
  }
  case FamilyKind::D: {
    data.ideals.push_back(simple_ideal("so(" + std::to_string(2 * m) + ")", m * (2 * m - 1), q(n, m - 1)));
    data.ideals.push_back(simple_ideal("sp(" + std::to_string(2 * n) + ")", n * (2 * n + 1), q(m, n + 1)));
    data.dim_odd = 4 * m * n;
    break;
  }
  case FamilyKind::Dn1n: {
    data.form = FormKind::Case6;
    data.killing_nondegenerate = false;
    data.ideals.push_back(simple_ideal("so(" + std::to_string(2 * n + 2) + ")", (n + 1) * (2 * n + 1), q(1)));
    data.ideals.push_back(simple_ideal("sp(" + std::to_string(2 * n) + ")", n * (2 * n + 1), q(1)));
    data.ideals[0].b = q(1);
    data.ideals[1].b = q(-n, n + 1);
    data.dim_odd = 4 * n * (n + 1);
    break;
  }
  case FamilyKind::D21alpha: {
    data.form = FormKind::Case7;
    data.killing_nondegenerate = false;
    data.ideals.push_back(simple_ideal("sl(2)_1", 3, q(1)));
    data.ideals.push_back(simple_ideal("sl(2)_2", 3, q(1)));
    data.ideals.push_back(simple_ideal("sl(2)_3", 3, q(1)));
    data.ideals[0].b = q(1);
    data.ideals[1].b = q(1);
    data.ideals[2].b = q(-1, 2);
    data.dim_odd = 8;
    break;
  }
  case FamilyKind::F4: {
    data.ideals.push_back(simple_ideal("spin(7)", 21, q(2, 5)));
    data.ideals.push_back(simple_ideal("sl(2)", 3, q(2)));
    data.dim_odd = 16;
    break;
  }
  case FamilyKind::G3: {
    data.ideals.push_back(simple_ideal("g2", 14, q(1, 2)));
    data.ideals.push_back(simple_ideal("sl(2)", 3, q(7, 4)));
    data.dim_odd = 14;
    break;
  }
  }
  finish_gammas(data);
  return data;
}

// ---------------------------------------------------------------------------
// Supermatrix realizations

namespace {

using Pos = std::pair<std::size_t, std::size_t>;

/// Sparse (p|q) x (p|q) supermatrix over Q, entries kept sorted by position.
struct SparseSuperMatrix
{
  std::map<Pos, Rational> entries;

  void add(std::size_t r, std::size_t c, const Rational& v)
  {
    auto& slot = entries[{r, c}];
    slot += v;
    if (sgn(slot) == 0) {
      entries.erase({r, c});
    }
  }
};

SparseSuperMatrix product(const SparseSuperMatrix& a, const SparseSuperMatrix& b)
{
  SparseSuperMatrix out;
  for (const auto& [pa, va] : a.entries) {
    for (const auto& [pb, vb] : b.entries) {
      if (pa.second == pb.first) {
        out.add(pa.first, pb.second, va * vb);
      }
    }
  }
  return out;
}

SparseSuperMatrix super_commutator(const SparseSuperMatrix& a, Parity pa, const SparseSuperMatrix& b, Parity pb)
{
  SparseSuperMatrix out = product(a, b);
  const bool both_odd = pa == Parity::Odd && pb == Parity::Odd;
  for (const auto& [pos, v] : product(b, a).entries) {
    out.add(pos.first, pos.second, both_odd ? Rational(v) : Rational(-v));
  }
  return out;
}

struct BasisElement
{
  SparseSuperMatrix mat;
  std::string label;
};

SparseSuperMatrix unit(std::size_t r, std::size_t c, const Rational& v = 1)
{
  SparseSuperMatrix x;
  x.add(r, c, v);
  return x;
}

SparseSuperMatrix combo(std::initializer_list<std::tuple<std::size_t, std::size_t, long>> terms)
{
  SparseSuperMatrix x;
  for (const auto& [r, c, v] : terms) {
    x.add(r, c, Rational(v));
  }
  return x;
}

/// A list of supermatrices spanning a Lie sub-superalgebra (possibly modulo a
/// trailing set of "quotient" elements whose coefficients are discarded).
struct MatrixModel
{
  std::size_t p = 0; // even rows/cols first
  std::size_t q = 0;
  std::vector<BasisElement> even;
  std::vector<BasisElement> odd;
  std::vector<BasisElement> quotient;
  std::vector<IdealBlock> decomposition;
};

Realization assemble(const MatrixModel& model)
{
  std::vector<const BasisElement*> all;
  for (const auto& e : model.even) {
    all.push_back(&e);
  }
  for (const auto& e : model.odd) {
    all.push_back(&e);
  }
  const std::size_t dim = all.size();
  for (const auto& e : model.quotient) {
    all.push_back(&e);
  }
  const std::size_t full = all.size();

  // Which basis elements touch which matrix slot.
  std::map<Pos, std::vector<std::pair<std::size_t, Rational>>> slot_index;
  for (std::size_t a = 0; a < full; ++a) {
    for (const auto& [pos, v] : all[a]->mat.entries) {
      slot_index[pos].push_back({a, v});
    }
  }
  RationalMatrix frob(full, full);
  for (const auto& [pos, list] : slot_index) {
    for (const auto& [a, va] : list) {
      for (const auto& [b, vb] : list) {
        frob(a, b) += va * vb;
      }
    }
  }
  const auto frob_inv = frob.inverse();
  if (!frob_inv) {
    throw std::logic_error("assemble: basis matrices are linearly dependent");
  }

  auto coordinates = [&](const SparseSuperMatrix& m) {
    std::map<std::size_t, Rational> w;
    for (const auto& [pos, v] : m.entries) {
      auto it = slot_index.find(pos);
      if (it == slot_index.end()) {
        throw std::logic_error("assemble: bracket leaves the span of the basis");
      }
      for (const auto& [a, va] : it->second) {
        w[a] += va * v;
      }
    }
    std::vector<Rational> coords(full, Rational(0));
    for (const auto& [a, wa] : w) {
      if (sgn(wa) == 0) {
        continue;
      }
      for (std::size_t k = 0; k < full; ++k) {
        const Rational& g = (*frob_inv)(k, a);
        if (sgn(g) != 0) {
          coords[k] += g * wa;
        }
      }
    }
    // Exact reconstruction check.
    SparseSuperMatrix rebuilt;
    for (std::size_t k = 0; k < full; ++k) {
      if (sgn(coords[k]) == 0) {
        continue;
      }
      for (const auto& [pos, v] : all[k]->mat.entries) {
        rebuilt.add(pos.first, pos.second, coords[k] * v);
      }
    }
    if (rebuilt.entries != m.entries) {
      throw std::logic_error("assemble: bracket is not in the span of the basis");
    }
    return coords;
  };

  const std::size_t n_even = model.even.size();
  auto parity_of = [&](std::size_t a) { return a < n_even ? Parity::Even : Parity::Odd; };

  std::vector<LieSuperAlgebra::ExactTriplet> triplets;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = a; b < dim; ++b) {
      const auto br = super_commutator(all[a]->mat, parity_of(a), all[b]->mat, parity_of(b));
      if (br.entries.empty()) {
        continue;
      }
      const auto coords = coordinates(br);
      const bool both_odd = parity_of(a) == Parity::Odd && parity_of(b) == Parity::Odd;
      for (std::size_t k = 0; k < dim; ++k) {
        if (sgn(coords[k]) == 0) {
          continue;
        }
        triplets.push_back({a, b, k, coords[k]});
        if (b != a) {
          // [e_b, e_a] = -(-1)^{|a||b|} [e_a, e_b]
          triplets.push_back({b, a, k, both_odd ? Rational(coords[k]) : Rational(-coords[k])});
        }
      }
    }
  }

  std::vector<std::string> labels;
  for (std::size_t a = 0; a < dim; ++a) {
    labels.push_back(all[a]->label);
  }
  Realization real;
  real.p = model.p;
  real.q = model.q;
  real.algebra = LieSuperAlgebra::from_exact(SuperBasis(n_even, model.odd.size(), labels), triplets,
                                             model.decomposition);

  // str(X_a X_b) = sum_{r,c} sigma_r X_a(r,c) X_b(c,r)
  RationalMatrix str_gram(dim, dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (const auto& [pos, va] : all[a]->mat.entries) {
      auto it = slot_index.find({pos.second, pos.first});
      if (it == slot_index.end()) {
        continue;
      }
      const bool row_even = pos.first < model.p;
      for (const auto& [b, vb] : it->second) {
        if (b >= dim) {
          continue;
        }
        if (row_even) {
          str_gram(a, b) += va * vb;
        } else {
          str_gram(a, b) -= va * vb;
        }
      }
    }
  }
  real.supertrace_gram = std::move(str_gram);
  return real;
}

std::string entry_label(const std::string& prefix, std::size_t r, std::size_t c)
{
  return prefix + "E" + std::to_string(r) + "," + std::to_string(c);
}

/// sl(size) basis embedded at offset: off-diagonal units then H_i = E_ii - E_{i+1,i+1}.
void push_sl(std::vector<BasisElement>& out, std::size_t offset, std::size_t size, const std::string& prefix)
{
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j) {
        out.push_back({unit(offset + i, offset + j), entry_label(prefix, i, j)});
      }
    }
  }
  for (std::size_t i = 0; i + 1 < size; ++i) {
    SparseSuperMatrix h;
    h.add(offset + i, offset + i, 1);
    h.add(offset + i + 1, offset + i + 1, -1);
    out.push_back({h, prefix + "H" + std::to_string(i)});
  }
}

void push_gl_odd(std::vector<BasisElement>& out, std::size_t p, std::size_t q)
{
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      out.push_back({unit(i, p + j), entry_label("Y", i, j)});
    }
  }
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t i = 0; i < p; ++i) {
      out.push_back({unit(p + j, i), entry_label("Z", j, i)});
    }
  }
}

void add_block(MatrixModel& model, std::size_t begin, IdealKind kind, const std::string& name)
{
  if (model.even.size() > begin) {
    model.decomposition.push_back({begin, model.even.size(), kind, name});
  }
}

/// Checks numerically that the canonical form equals scale * str-Gram, and that
/// the Killing form agrees with its known multiple of str(XY).
void attach_forms(Realization& real, const Rational& killing_scale, const Rational& form_scale)
{
  const BilinearFormMatrix k = killing_form(real.algebra);
  const CMatrix predicted = real.supertrace_gram.scaled(killing_scale).to_complex();
  const double dev = (k.gram - predicted).cwiseAbs().maxCoeff();
  if (dev > 1e-9 * std::max(1.0, predicted.cwiseAbs().maxCoeff())) {
    throw std::logic_error("realization: Killing form is not the expected multiple of str(XY)");
  }
  real.form_scale = form_scale;
  real.canonical_form.exact = real.supertrace_gram.scaled(form_scale);
  real.canonical_form.gram = real.canonical_form.exact->to_complex();
  real.canonical_form = with_checked_flags(real.algebra, std::move(real.canonical_form));
}

} // namespace

Realization build_sl_super(int m, int n)
{
  if (m < 0 || n < 0) {
    throw InputError("build_sl_super: requires m, n >= 0");
  }
  if (m == n) {
    throw InputError("build_sl_super: m = n gives a non-simple algebra; use build_psl(n)");
  }
  const std::size_t p = static_cast<std::size_t>(m) + 1;
  const std::size_t qq = static_cast<std::size_t>(n) + 1;
  MatrixModel model;
  model.p = p;
  model.q = qq;
  SparseSuperMatrix z;
  for (std::size_t i = 0; i < p; ++i) {
    z.add(i, i, Rational(static_cast<long>(qq)));
  }
  for (std::size_t j = 0; j < qq; ++j) {
    z.add(p + j, p + j, Rational(static_cast<long>(p)));
  }
  model.even.push_back({z, "Z"});
  add_block(model, 0, IdealKind::Abelian, "C");
  push_sl(model.even, 0, p, "a:");
  add_block(model, 1, IdealKind::Simple, "sl(" + std::to_string(p) + ")");
  const std::size_t mark = model.even.size();
  push_sl(model.even, p, qq, "d:");
  add_block(model, mark, IdealKind::Simple, "sl(" + std::to_string(qq) + ")");
  push_gl_odd(model.odd, p, qq);

  Realization real = assemble(model);
  real.spec = FamilySpec::a(m, n);
  real.data = family_data(real.spec);
  attach_forms(real, make_rational(2 * (m - n)), make_rational(2 * (m - n)));
  return real;
}

Realization build_psl(int n)
{
  if (n < 1) {
    throw InputError("build_psl: requires n >= 1");
  }
  const std::size_t p = static_cast<std::size_t>(n) + 1;
  MatrixModel model;
  model.p = p;
  model.q = p;
  push_sl(model.even, 0, p, "a:");
  add_block(model, 0, IdealKind::Simple, "sl(" + std::to_string(p) + ")_1");
  const std::size_t mark = model.even.size();
  push_sl(model.even, p, p, "d:");
  add_block(model, mark, IdealKind::Simple, "sl(" + std::to_string(p) + ")_2");
  push_gl_odd(model.odd, p, p);
  SparseSuperMatrix id;
  for (std::size_t i = 0; i < 2 * p; ++i) {
    id.add(i, i, 1);
  }
  model.quotient.push_back({id, "I"});

  Realization real = assemble(model);
  real.spec = FamilySpec::a(n, n);
  real.data = family_data(real.spec);
  attach_forms(real, Rational(0), make_rational(2 * (n + 1)));
  return real;
}

Realization build_osp(int l, int k)
{
  if (l < 1) {
    throw InputError("build_osp: requires l >= 1");
  }
  if (k < 2 || k % 2 != 0) {
    throw InputError("build_osp: k must be even and >= 2");
  }
  const std::size_t L = static_cast<std::size_t>(l);
  const std::size_t r = static_cast<std::size_t>(k) / 2;
  MatrixModel model;
  model.p = L;
  model.q = static_cast<std::size_t>(k);

  FamilySpec spec;
  if (l == 2) {
    spec = FamilySpec::c(static_cast<int>(r) + 1);
  } else if (l % 2 == 1) {
    spec = FamilySpec::b((l - 1) / 2, static_cast<int>(r));
  } else {
    spec = FamilySpec::d(l / 2, static_cast<int>(r));
  }

  // so(l) on the leading l x l block.
  if (spec.kind == FamilyKind::D21alpha) {
    // so(4) = sl(2) + sl(2): self-dual and anti-self-dual combinations.
    model.even.push_back({combo({{0, 1, 1}, {1, 0, -1}, {2, 3, 1}, {3, 2, -1}}), "so4+:01+23"});
    model.even.push_back({combo({{0, 2, 1}, {2, 0, -1}, {1, 3, -1}, {3, 1, 1}}), "so4+:02-13"});
    model.even.push_back({combo({{0, 3, 1}, {3, 0, -1}, {1, 2, 1}, {2, 1, -1}}), "so4+:03+12"});
    add_block(model, 0, IdealKind::Simple, "sl(2)_1");
    model.even.push_back({combo({{0, 1, 1}, {1, 0, -1}, {2, 3, -1}, {3, 2, 1}}), "so4-:01-23"});
    model.even.push_back({combo({{0, 2, 1}, {2, 0, -1}, {1, 3, 1}, {3, 1, -1}}), "so4-:02+13"});
    model.even.push_back({combo({{0, 3, 1}, {3, 0, -1}, {1, 2, -1}, {2, 1, 1}}), "so4-:03-12"});
    add_block(model, 3, IdealKind::Simple, "sl(2)_2");
  } else {
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = i + 1; j < L; ++j) {
        SparseSuperMatrix x;
        x.add(i, j, 1);
        x.add(j, i, -1);
        model.even.push_back({x, "so:" + std::to_string(i) + std::to_string(j)});
      }
    }
    add_block(model, 0, L == 2 ? IdealKind::Abelian : IdealKind::Simple,
              "so(" + std::to_string(L) + ")");
  }

  // sp(k) on the trailing block, F = J = [[0, I_r], [-I_r, 0]].
  const std::size_t mark = model.even.size();
  const std::size_t o = L;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      SparseSuperMatrix x;
      x.add(o + i, o + j, 1);
      x.add(o + r + j, o + r + i, -1);
      model.even.push_back({x, "sp:P" + std::to_string(i) + std::to_string(j)});
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      SparseSuperMatrix x;
      x.add(o + i, o + r + j, 1);
      if (i != j) {
        x.add(o + j, o + r + i, 1);
      }
      model.even.push_back({x, "sp:Q" + std::to_string(i) + std::to_string(j)});
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      SparseSuperMatrix x;
      x.add(o + r + i, o + j, 1);
      if (i != j) {
        x.add(o + r + j, o + i, 1);
      }
      model.even.push_back({x, "sp:R" + std::to_string(i) + std::to_string(j)});
    }
  }
  const std::string sp_name = spec.kind == FamilyKind::D21alpha ? "sl(2)_3" : "sp(" + std::to_string(k) + ")";
  add_block(model, mark, IdealKind::Simple, sp_name);

  // Odd part: B = E_ij in the upper-right block, C = -J B^T in the lower-left.
  for (std::size_t i = 0; i < L; ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
      SparseSuperMatrix x;
      x.add(i, o + j, 1);
      if (j < r) {
        x.add(o + r + j, i, 1);
      } else {
        x.add(o + j - r, i, -1);
      }
      model.odd.push_back({x, "odd:" + std::to_string(i) + "," + std::to_string(j)});
    }
  }

  Realization real = assemble(model);
  real.spec = spec;
  real.data = family_data(spec);
  const Rational killing_scale = make_rational(l - k - 2);
  Rational form_scale = killing_scale;
  if (spec.kind == FamilyKind::Dn1n) {
    form_scale = make_rational(2 * spec.n);
  } else if (spec.kind == FamilyKind::D21alpha) {
    form_scale = make_rational(2);
  }
  attach_forms(real, killing_scale, form_scale);
  return real;
}

Realization realize(const FamilySpec& spec)
{
  switch (spec.kind) {
  case FamilyKind::A: return build_sl_super(spec.m, spec.n);
  case FamilyKind::Ann: return build_psl(spec.n);
  case FamilyKind::B: return build_osp(2 * spec.m + 1, 2 * spec.n);
  case FamilyKind::C: return build_osp(2, 2 * spec.n - 2);
  case FamilyKind::D:
  case FamilyKind::Dn1n: return build_osp(2 * spec.m, 2 * spec.n);
  case FamilyKind::D21alpha:
    if (spec.alpha == 1.0) {
      return build_osp(4, 2);
    }
    throw ScopeError(spec.name() + " is handled at the equation layer only (no matrix realization for alpha != 1)");
  case FamilyKind::F4:
  case FamilyKind::G3:
    throw ScopeError(spec.name() + " is handled at the equation layer only (no matrix realization)");
  }
  throw InputError("realize: unknown family");
}

std::vector<FamilySpec> catalog(int max_m, int max_n)
{
  if (max_m < 0 || max_n < 0) {
    throw InputError("catalog: bounds must be non-negative");
  }
  std::vector<FamilySpec> out;
  std::set<std::string> seen;
  auto push = [&](const FamilySpec& s) {
    if (seen.insert(s.name()).second) {
      out.push_back(s);
    }
  };
  for (int m = 0; m <= max_m; ++m) {
    for (int n = 0; n <= max_n; ++n) {
      if (m == 0 && n == 0) {
        continue;
      }
      push(FamilySpec::a(m, n));
    }
  }
  for (int m = 0; m <= max_m; ++m) {
    for (int n = 1; n <= max_n; ++n) {
      push(FamilySpec::b(m, n));
    }
  }
  for (int n = 3; n <= std::max(3, max_n); ++n) {
    push(FamilySpec::c(n));
  }
  for (int m = 2; m <= std::max(2, max_m); ++m) {
    for (int n = 1; n <= max_n; ++n) {
      push(FamilySpec::d(m, n));
    }
  }
  push(FamilySpec::f4());
  push(FamilySpec::g3());
  push(FamilySpec::d21(1.0));
  push(FamilySpec::d21(2.5));
  return out;
}

} // namespace superein
