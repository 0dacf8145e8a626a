#include <sstream>

#include "cgw/error.hpp"
#include "group_impl.hpp"

namespace cgw::detail {

namespace {

Field make_field(std::uint32_t q) {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  if (!prime_power_decompose(q, p, n)) throw UnsupportedError("PSL2(" + std::to_string(q) + "): q is not a prime power");
  return Field(p, n);
}

}  // namespace

Psl2Impl::Psl2Impl(std::uint32_t q) : field_(make_field(q)) {
  const Field& f = field_;
  key_to_index_.assign(std::size_t{q} * q * q * q, -1);
  auto negate = [&](const std::array<FieldElement, 4>& m) {
    return std::array<FieldElement, 4>{f.neg(m[0]), f.neg(m[1]), f.neg(m[2]), f.neg(m[3])};
  };
  auto less = [](const std::array<FieldElement, 4>& a, const std::array<FieldElement, 4>& b) {
    return a < b;
  };
  const std::array<FieldElement, 4> id{f.one(), f.zero(), f.zero(), f.one()};
  std::array<FieldElement, 4> id_rep = id;
  if (less(negate(id), id)) id_rep = negate(id);
  elements_.push_back(id_rep);
  // Remaining canonical representatives in lexicographic order of entry codes.
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t d = 0; d < q; ++d) {
          const std::array<FieldElement, 4> m{FieldElement{a}, FieldElement{b}, FieldElement{c}, FieldElement{d}};
          if (f.sub(f.mul(m[0], m[3]), f.mul(m[1], m[2])) != f.one()) continue;
          const auto nm = negate(m);
          if (less(nm, m)) continue;
          if (m == id_rep) continue;
          elements_.push_back(m);
        }
      }
    }
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    key_to_index_[key(elements_[i])] = static_cast<std::int32_t>(i);
    key_to_index_[key(negate(elements_[i]))] = static_cast<std::int32_t>(i);
  }
}

std::size_t Psl2Impl::key(const std::array<FieldElement, 4>& m) const {
  const std::size_t q = field_.order();
  return ((std::size_t{m[0].code} * q + m[1].code) * q + m[2].code) * q + m[3].code;
}

Elem Psl2Impl::index_of(const std::array<FieldElement, 4>& m) const {
  for (const auto& e : m) {
    if (e.code >= field_.order()) throw std::invalid_argument("matrix entry outside the field");
  }
  const std::int32_t idx = key_to_index_[key(m)];
  if (idx < 0) throw std::invalid_argument("matrix does not have determinant 1");
  return static_cast<Elem>(idx);
}

Elem Psl2Impl::mul(Elem a, Elem b) const {
  const Field& f = field_;
  const auto& x = elements_[a];
  const auto& y = elements_[b];
  const std::array<FieldElement, 4> m{f.add(f.mul(x[0], y[0]), f.mul(x[1], y[2])),
                                      f.add(f.mul(x[0], y[1]), f.mul(x[1], y[3])),
                                      f.add(f.mul(x[2], y[0]), f.mul(x[3], y[2])),
                                      f.add(f.mul(x[2], y[1]), f.mul(x[3], y[3]))};
  return static_cast<Elem>(key_to_index_[key(m)]);
}

Elem Psl2Impl::inv(Elem a) const {
  const Field& f = field_;
  const auto& x = elements_[a];
  return static_cast<Elem>(key_to_index_[key({x[3], f.neg(x[1]), f.neg(x[2]), x[0]})]);
}

std::vector<Elem> Psl2Impl::generators() const {
  const Field& f = field_;
  std::vector<Elem> gens;
  gens.push_back(index_of({f.one(), f.one(), f.zero(), f.one()}));
  gens.push_back(index_of({f.one(), f.zero(), f.one(), f.one()}));
  const FieldElement w = f.primitive_element();
  if (f.order() > 3) gens.push_back(index_of({w, f.zero(), f.zero(), f.inv(w)}));
  return gens;
}

void Psl2Impl::encode(Elem a, std::vector<int>& out) const {
  for (const auto& e : elements_[a]) out.push_back(static_cast<int>(e.code));
}

Elem Psl2Impl::decode(std::span<const int> code) const {
  if (code.size() != 4) throw std::invalid_argument("PSL2 code must have 4 entries");
  std::array<FieldElement, 4> m{};
  for (int i = 0; i < 4; ++i) {
    if (code[i] < 0) throw std::invalid_argument("negative field code");
    m[i] = FieldElement{static_cast<std::uint32_t>(code[i])};
  }
  return index_of(m);
}

std::string Psl2Impl::format(Elem a) const {
  const auto& m = elements_[a];
  std::ostringstream os;
  os << "[[" << field_.to_string(m[0]) << "," << field_.to_string(m[1]) << "],[" << field_.to_string(m[2])
     << "," << field_.to_string(m[3]) << "]]";
  return os.str();
}

}  // namespace cgw::detail
