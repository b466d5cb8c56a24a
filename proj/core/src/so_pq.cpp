#include "sopq/so_pq.hpp"

#include "sopq/linalg.hpp"

#include <stdexcept>

namespace sopq {

Mat form_matrix(const Signature& sig)
{
  Mat j = Mat::identity(sig.d());
  for (int r = sig.p; r < sig.d(); ++r) j.at(r, r) = -1;
  return j;
}

Mat form_involution(const Signature& sig, const Mat& x)
{
  const Mat j = form_matrix(sig);
  return j * x.transposed() * j;
}

bool is_member_so(const Signature& sig, const Mat& x)
{
  if (static_cast<int>(x.rows()) != sig.d() || !x.is_square()) return false;
  return (form_involution(sig, x) + x).is_zero();
}

bool is_member_s(const Signature& sig, const Mat& x)
{
  if (static_cast<int>(x.rows()) != sig.d() || !x.is_square()) return false;
  return (form_involution(sig, x) - x).is_zero() && x.trace() == 0;
}

int dim_so(const Signature& sig)
{
  return (sig.p * (sig.p - 1) + sig.q * (sig.q - 1)) / 2 + sig.p * sig.q;
}

int dim_s(const Signature& sig)
{
  return (sig.p * (sig.p + 1) + sig.q * (sig.q + 1)) / 2 + sig.p * sig.q - 1;
}

std::pair<Mat, Mat> project(const Signature& sig, const Mat& x)
{
  if (static_cast<int>(x.rows()) != sig.d() || !x.is_square())
    throw std::invalid_argument("project: matrix size does not match signature");
  if (x.trace() != 0) throw std::invalid_argument("project: matrix must be traceless");
  const Mat sx = form_involution(sig, x);
  const Rational half(1, 2);
  return {half * (x - sx), half * (x + sx)};
}

std::vector<Mat> standard_basis_so(const Signature& sig)
{
  std::vector<Mat> basis;
  basis.reserve(dim_so(sig));
  for (int i = 1; i <= sig.p; ++i)
    for (int j = i + 1; j <= sig.p; ++j)
      basis.push_back(block_unit(sig, Block::A, i, j) - block_unit(sig, Block::A, j, i));
  for (int i = 1; i <= sig.p; ++i)
    for (int j = 1; j <= sig.q; ++j)
      basis.push_back(block_unit(sig, Block::B, i, j) + block_unit(sig, Block::C, j, i));
  for (int i = 1; i <= sig.q; ++i)
    for (int j = i + 1; j <= sig.q; ++j)
      basis.push_back(block_unit(sig, Block::D, i, j) - block_unit(sig, Block::D, j, i));
  return basis;
}

CartanSplit cartan_split(const Signature& sig)
{
  CartanSplit split;
  for (int i = 1; i <= sig.p; ++i)
    for (int j = i + 1; j <= sig.p; ++j)
      split.k.push_back(block_unit(sig, Block::A, i, j) - block_unit(sig, Block::A, j, i));
  for (int i = 1; i <= sig.q; ++i)
    for (int j = i + 1; j <= sig.q; ++j)
      split.k.push_back(block_unit(sig, Block::D, i, j) - block_unit(sig, Block::D, j, i));
  for (int i = 1; i <= sig.p; ++i)
    for (int j = 1; j <= sig.q; ++j)
      split.p.push_back(block_unit(sig, Block::B, i, j) + block_unit(sig, Block::C, j, i));
  return split;
}

Mat torus_generator(const Signature& sig, int i)
{
  if (i < 1 || i > sig.q) throw std::invalid_argument("torus_generator: index out of range");
  return block_unit(sig, Block::B, i, i) + block_unit(sig, Block::C, i, i);
}

std::vector<Mat> abelian_a(const Signature& sig)
{
  std::vector<Mat> gens;
  gens.reserve(sig.q);
  for (int i = 1; i <= sig.q; ++i) gens.push_back(torus_generator(sig, i));
  return gens;
}

bool a_maximal_abelian_in_p(const Signature& sig)
{
  const CartanSplit split = cartan_split(sig);
  const std::vector<Mat> torus = abelian_a(sig);
  if (split.p.empty()) return torus.empty();

  // Centralizer of a inside span(p): kernel of x -> ([x, F_1], ..., [x, F_q])
  // in coordinates over the p-basis.
  const std::size_t np = split.p.size();
  const std::size_t flat = static_cast<std::size_t>(sig.d()) * sig.d();
  std::vector<std::vector<Rational>> images(np);
  for (std::size_t t = 0; t < np; ++t) {
    std::vector<Rational> img;
    img.reserve(flat * torus.size());
    for (const Mat& f : torus) {
      const std::vector<Rational> part = bracket(split.p[t], f).flatten();
      img.insert(img.end(), part.begin(), part.end());
    }
    images[t] = std::move(img);
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t coord = 0; coord < flat * torus.size(); ++coord) {
    std::vector<Rational> row(np);
    bool nonzero = false;
    for (std::size_t t = 0; t < np; ++t) {
      row[t] = images[t][coord];
      nonzero = nonzero || row[t] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  const VectorSpaceBasis centralizer_coords = kernel_of_rows(rows, np);
  if (centralizer_coords.dim() != torus.size()) return false;

  // The kernel must be exactly the coordinates of the F_i themselves.
  SpanTracker tracker(np);
  for (const auto& v : centralizer_coords.vectors) tracker.insert(v);
  std::vector<std::vector<Rational>> p_flats;
  p_flats.reserve(np);
  for (const Mat& m : split.p) p_flats.push_back(m.flatten());
  for (const Mat& f : torus) {
    const auto coords = solve_coordinates(f.flatten(), p_flats);
    if (!coords || !tracker.contains(*coords)) return false;
  }
  return true;
}

bool LinearForm::is_zero() const
{
  for (int c : coeffs)
    if (c != 0) return false;
  return true;
}

LinearForm LinearForm::operator+(const LinearForm& o) const
{
  if (coeffs.size() != o.coeffs.size())
    throw std::invalid_argument("LinearForm: rank mismatch");
  LinearForm r = *this;
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (-o); }

LinearForm LinearForm::operator-() const
{
  LinearForm r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

LinearForm zero_form(int q) { return LinearForm{std::vector<int>(q, 0)}; }

LinearForm unit_form(int q, int i)
{
  if (i < 1 || i > q) throw std::invalid_argument("unit_form: index out of range");
  LinearForm f = zero_form(q);
  f.coeffs[i - 1] = 1;
  return f;
}

bool lex_less(const LinearForm& a, const LinearForm& b)
{
  return a.coeffs < b.coeffs;
}

std::string pretty(const LinearForm& form)
{
  std::string out;
  for (std::size_t i = 0; i < form.coeffs.size(); ++i) {
    const int c = form.coeffs[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c > 0 ? " + " : " - ";
    }
    const int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += "f_" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

bool satisfies_eigen_relations(const Signature& sig, const LinearForm& form, const Mat& x)
{
  if (static_cast<int>(form.coeffs.size()) != sig.q)
    throw std::invalid_argument("satisfies_eigen_relations: form rank mismatch");
  for (int i = 1; i <= sig.q; ++i) {
    const Mat lhs = bracket(torus_generator(sig, i), x);
    if (lhs != Rational(form.coeffs[i - 1]) * x) return false;
  }
  return true;
}

} // namespace sopq
