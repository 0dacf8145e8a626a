#include <algorithm>
#include <numeric>
#include <sstream>

#include "cgw/error.hpp"
#include "group_impl.hpp"

namespace cgw::detail {

namespace {

std::uint32_t factorial(std::uint32_t n) {
  std::uint32_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_even(const std::array<std::uint8_t, 16>& img, std::uint32_t n) {
  std::uint32_t inversions = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) inversions += img[i] > img[j];
  }
  return inversions % 2 == 0;
}

}  // namespace

PermImpl::PermImpl(std::uint32_t degree, bool alternating) : degree_(degree), alternating_(alternating) {
  std::array<std::uint8_t, 16> img{};
  for (std::uint8_t i = 0; i < 16; ++i) img[i] = i;
  rank_to_index_.assign(factorial(degree_), -1);
  std::uint32_t r = 0;
  do {
    if (!alternating_ || is_even(img, degree_)) {
      rank_to_index_[r] = static_cast<std::int32_t>(elements_.size());
      elements_.push_back(kernels::Perm16{img});
    }
    ++r;
  } while (std::next_permutation(img.begin(), img.begin() + degree_));
}

std::uint32_t PermImpl::rank(const kernels::Perm16& p) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    std::uint32_t smaller = 0;
    for (std::uint32_t j = i + 1; j < degree_; ++j) smaller += p.img[j] < p.img[i];
    r = r * (degree_ - i) + smaller;
  }
  return r;
}

std::optional<Elem> PermImpl::find(const kernels::Perm16& p) const {
  std::uint32_t seen = 0;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (p.img[i] >= degree_) return std::nullopt;
    seen |= 1u << p.img[i];
  }
  if (seen != (1u << degree_) - 1) return std::nullopt;
  for (std::uint32_t i = degree_; i < 16; ++i) {
    if (p.img[i] != i) return std::nullopt;
  }
  const std::int32_t idx = rank_to_index_[rank(p)];
  if (idx < 0) return std::nullopt;
  return static_cast<Elem>(idx);
}

Elem PermImpl::index_of(const kernels::Perm16& p) const {
  const auto idx = find(p);
  if (!idx) throw std::invalid_argument("permutation is not an element of the group");
  return *idx;
}

kernels::Perm16 PermImpl::invert(const kernels::Perm16& p) const {
  kernels::Perm16 r = kernels::Perm16::identity();
  for (std::uint32_t i = 0; i < degree_; ++i) r.img[p.img[i]] = static_cast<std::uint8_t>(i);
  return r;
}

Elem PermImpl::mul(Elem a, Elem b) const {
  const auto& pa = elements_[a];
  const auto& pb = elements_[b];
  kernels::Perm16 c = kernels::Perm16::identity();
  for (std::uint32_t i = 0; i < degree_; ++i) c.img[i] = pb.img[pa.img[i]];
  return static_cast<Elem>(rank_to_index_[rank(c)]);
}

std::vector<Elem> PermImpl::generators() const {
  std::vector<Elem> gens;
  auto cycle = [&](std::initializer_list<std::uint32_t> pts) {
    kernels::Perm16 p = kernels::Perm16::identity();
    const std::vector<std::uint32_t> v(pts);
    for (std::size_t i = 0; i < v.size(); ++i) p.img[v[i]] = static_cast<std::uint8_t>(v[(i + 1) % v.size()]);
    return p;
  };
  if (degree_ < 2) return gens;
  if (alternating_) {
    for (std::uint32_t i = 2; i < degree_; ++i) gens.push_back(index_of(cycle({0, 1, i})));
  } else {
    gens.push_back(index_of(cycle({0, 1})));
    if (degree_ > 2) {
      kernels::Perm16 p = kernels::Perm16::identity();
      for (std::uint32_t i = 0; i < degree_; ++i) p.img[i] = static_cast<std::uint8_t>((i + 1) % degree_);
      gens.push_back(index_of(p));
    }
  }
  return gens;
}

void PermImpl::encode(Elem a, std::vector<int>& out) const {
  for (std::uint32_t i = 0; i < degree_; ++i) out.push_back(elements_[a].img[i]);
}

Elem PermImpl::decode(std::span<const int> code) const {
  if (code.size() != degree_) throw std::invalid_argument("permutation code has wrong length");
  kernels::Perm16 p = kernels::Perm16::identity();
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if (code[i] < 0 || code[i] >= static_cast<int>(degree_)) throw std::invalid_argument("point out of range");
    p.img[i] = static_cast<std::uint8_t>(code[i]);
  }
  return index_of(p);
}

std::string PermImpl::format(Elem a) const {
  const auto& p = elements_[a];
  std::ostringstream os;
  std::uint32_t done = 0;
  for (std::uint32_t i = 0; i < degree_; ++i) {
    if ((done >> i) & 1u || p.img[i] == i) continue;
    os << "(";
    std::uint32_t j = i;
    bool first = true;
    do {
      if (!first) os << " ";
      first = false;
      os << j + 1;
      done |= 1u << j;
      j = p.img[j];
    } while (j != i);
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

}  // namespace cgw::detail
