#include <sstream>

#include "hypercone/errors.hpp"
#include "hypercone/states.hpp"

namespace hypercone {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw ResourceError("amplitude overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ResourceError("amplitude overflow");
  return r;
}

}  // namespace

Eisenstein operator+(Eisenstein x, Eisenstein y) { return {checked_add(x.a, y.a), checked_add(x.b, y.b)}; }
Eisenstein operator-(Eisenstein x, Eisenstein y) { return {checked_add(x.a, -y.a), checked_add(x.b, -y.b)}; }

// omega^2 = -1 - omega.
Eisenstein operator*(Eisenstein x, Eisenstein y) {
  if (x.b == 0 && y.b == 0) return {checked_mul(x.a, y.a), 0};
  const std::int64_t ac = checked_mul(x.a, y.a), bd = checked_mul(x.b, y.b);
  const std::int64_t ad = checked_mul(x.a, y.b), bc = checked_mul(x.b, y.a);
  return {checked_add(ac, -bd), checked_add(checked_add(ad, bc), -bd)};
}

Eisenstein conj(Eisenstein x) { return {checked_add(x.a, -x.b), -x.b}; }

std::int64_t norm(Eisenstein x) {
  return checked_add(checked_add(checked_mul(x.a, x.a), -checked_mul(x.a, x.b)), checked_mul(x.b, x.b));
}

std::string to_string(Eisenstein x) {
  std::ostringstream os;
  if (x.b == 0) {
    os << (x.a < 0 ? "-" : "+") << (x.a < 0 ? -x.a : x.a);
    return os.str();
  }
  os << "(" << x.a << (x.b < 0 ? "-" : "+");
  if (x.b != 1 && x.b != -1) os << (x.b < 0 ? -x.b : x.b);
  os << "ω)";
  return os.str();
}

const Eisenstein& Tensor::at(const std::vector<int>& index) const {
  if (index.size() != dims.size()) throw InputError("tensor index has the wrong rank");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (index[i] < 0 || index[i] >= dims[i]) throw InputError("tensor index out of range");
    flat = flat * dims[i] + index[i];
  }
  return data[flat];
}

Tensor ghz_tensor(int omega, int d) {
  if (omega < 2 || d < 2) throw InputError("GHZ tensor needs omega >= 2 and d >= 2");
  Tensor t;
  t.dims.assign(omega, d);
  std::size_t size = 1;
  for (int i = 0; i < omega; ++i) size *= d;
  t.data.assign(size, {});
  // Index (j, j, ..., j) sits at j * (d^omega - 1) / (d - 1).
  const std::size_t step = (size - 1) / (d - 1);
  for (int j = 0; j < d; ++j) t.data[j * step] = {1, 0};
  t.N = d;
  return t;
}

Tensor ame_tensor(int degree, int d) {
  switch (degree) {
    case 2:
    case 3:
      return ghz_tensor(degree, d);
    case 4: {
      if (d != 3) throw RegistryError("the registered 4-leg AME tensor is a qutrit tensor, requested d=" + std::to_string(d));
      Tensor t;
      t.dims = {3, 3, 3, 3};
      t.data.assign(81, {});
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          const int k = (i + j) % 3, l = (i + 2 * j) % 3;
          t.data[((i * 3 + j) * 3 + k) * 3 + l] = {1, 0};
        }
      t.N = 9;
      return t;
    }
    default:
      throw RegistryError("no AME tensor registered for degree " + std::to_string(degree));
  }
}

Tensor hadamard_tensor(int d) {
  Tensor t;
  t.dims = {d, d};
  if (d == 2) {
    t.data = {{1, 0}, {1, 0}, {1, 0}, {-1, 0}};
    t.N = 2;
    return t;
  }
  if (d == 3) {
    const Eisenstein powers[3] = {{1, 0}, {0, 1}, {-1, -1}};
    t.data.resize(9);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) t.data[j * 3 + k] = powers[(j * k) % 3];
    t.N = 3;
    return t;
  }
  throw RegistryError("no Hadamard matrix registered for dimension " + std::to_string(d));
}

}  // namespace hypercone
