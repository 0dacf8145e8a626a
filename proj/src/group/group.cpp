#include "cgw/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "cgw/error.hpp"
#include "group_impl.hpp"

namespace cgw {

namespace {

std::uint32_t parse_uint(std::string_view text, std::string_view whole) {
  std::uint32_t v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (text.empty() || res.ec != std::errc{} || res.ptr != end) {
    throw UnsupportedError("malformed group descriptor '" + std::string(whole) + "'");
  }
  return v;
}

GroupDescriptor parse_simple(std::string_view t, std::string_view whole) {
  GroupDescriptor d;
  if (t.starts_with("PSL2(") && t.ends_with(")")) {
    d.family = Family::psl2;
    d.parameter = parse_uint(t.substr(5, t.size() - 6), whole);
  } else if (t.starts_with("A")) {
    d.family = Family::alternating;
    d.parameter = parse_uint(t.substr(1), whole);
  } else if (t.starts_with("S")) {
    d.family = Family::symmetric;
    d.parameter = parse_uint(t.substr(1), whole);
  } else if (t.starts_with("C")) {
    d.family = Family::cyclic;
    d.parameter = parse_uint(t.substr(1), whole);
  } else {
    throw UnsupportedError("unknown group family in '" + std::string(whole) + "'");
  }
  return d;
}

std::uint64_t simple_order(const GroupDescriptor& d) {
  std::uint64_t f = 1;
  switch (d.family) {
    case Family::alternating:
      if (d.parameter < 3 || d.parameter > 9) throw UnsupportedError("A_n requires 3 <= n <= 9");
      for (std::uint32_t i = 3; i <= d.parameter; ++i) f *= i;
      return f;
    case Family::symmetric:
      if (d.parameter < 2 || d.parameter > 8) throw UnsupportedError("S_n requires 2 <= n <= 8");
      for (std::uint32_t i = 2; i <= d.parameter; ++i) f *= i;
      return f;
    case Family::psl2: {
      std::uint32_t p = 0;
      std::uint32_t n = 0;
      if (d.parameter < 2 || d.parameter > 16 || !prime_power_decompose(d.parameter, p, n)) {
        throw UnsupportedError("PSL2(q) requires a prime power 2 <= q <= 16");
      }
      const std::uint64_t q = d.parameter;
      return q * (q * q - 1) / (q % 2 == 1 ? 2 : 1);
    }
    case Family::cyclic:
      if (d.parameter < 1 || d.parameter > kEnumerationCap) throw UnsupportedError("C_m requires 1 <= m <= 10000");
      return d.parameter;
    case Family::product:
      break;
  }
  throw UnsupportedError("nested products are not supported");
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
}

}  // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == 'x' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(text.substr(start));
  if (parts.size() == 1) {
    GroupDescriptor d = parse_simple(parts[0], text);
    simple_order(d);
    return d;
  }
  GroupDescriptor d;
  d.family = Family::product;
  d.parameter = 0;
  std::uint64_t total = 1;
  for (auto p : parts) {
    d.factors.push_back(parse_simple(p, text));
    total *= simple_order(d.factors.back());
    if (total > kEnumerationCap) throw CapExceededError("direct product order exceeds 10000");
  }
  return d;
}

std::string GroupDescriptor::to_string() const {
  switch (family) {
    case Family::alternating:
      return "A" + std::to_string(parameter);
    case Family::symmetric:
      return "S" + std::to_string(parameter);
    case Family::psl2:
      return "PSL2(" + std::to_string(parameter) + ")";
    case Family::cyclic:
      return "C" + std::to_string(parameter);
    case Family::product: {
      std::string s;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += factors[i].to_string();
      }
      return s;
    }
  }
  return "?";
}

namespace detail {

std::shared_ptr<const GroupImpl> make_impl(const GroupDescriptor& d) {
  switch (d.family) {
    case Family::alternating:
      simple_order(d);
      return std::make_shared<PermImpl>(d.parameter, true);
    case Family::symmetric:
      simple_order(d);
      return std::make_shared<PermImpl>(d.parameter, false);
    case Family::psl2:
      simple_order(d);
      return std::make_shared<Psl2Impl>(d.parameter);
    case Family::cyclic:
      simple_order(d);
      return std::make_shared<CyclicImpl>(d.parameter);
    case Family::product: {
      std::vector<std::shared_ptr<const GroupImpl>> fs;
      std::uint64_t total = 1;
      for (const auto& f : d.factors) {
        if (f.family == Family::product) throw UnsupportedError("nested products are not supported");
        total *= simple_order(f);
        fs.push_back(make_impl(f));
      }
      if (total > kEnumerationCap) throw CapExceededError("direct product order exceeds 10000");
      return std::make_shared<ProductImpl>(std::move(fs));
    }
  }
  throw UnsupportedError("unknown family");
}

}  // namespace detail

Group::Group(const GroupDescriptor& descriptor) {
  auto st = std::make_shared<detail::GroupState>();
  st->descriptor = descriptor;
  st->impl = detail::make_impl(descriptor);
  const auto& impl = *st->impl;
  st->order = impl.order();
  st->inverse.resize(st->order);
  for (Elem a = 0; a < st->order; ++a) st->inverse[a] = impl.inv(a);
  st->generators = impl.generators();
  if (st->order <= detail::kCayleyCap) {
    st->cayley.resize(st->order * st->order);
    for (Elem a = 0; a < st->order; ++a) {
      for (Elem b = 0; b < st->order; ++b) {
        st->cayley[std::size_t{a} * st->order + b] = static_cast<std::uint16_t>(impl.mul(a, b));
      }
    }
  }
  std::uint64_t h = kFnvOffset;
  for (char c : descriptor.to_string()) fnv_mix(h, static_cast<unsigned char>(c));
  fnv_mix(h, st->order);
  std::vector<int> code;
  for (Elem a = 0; a < st->order; ++a) {
    code.clear();
    impl.encode(a, code);
    for (int v : code) fnv_mix(h, static_cast<std::uint64_t>(v));
    for (Elem s : st->generators) fnv_mix(h, impl.mul(a, s));
  }
  st->digest = h;
  state_ = std::move(st);

  if (order() > 1 && subgroup_closure(*this, generators()).size() != order()) {
    throw InternalError("generators of " + name() + " do not generate the group");
  }
}

const GroupDescriptor& Group::descriptor() const noexcept { return state_->descriptor; }
std::size_t Group::order() const noexcept { return state_->order; }
const std::vector<Elem>& Group::generators() const noexcept { return state_->generators; }
bool Group::has_cayley_table() const noexcept { return !state_->cayley.empty(); }
std::uint64_t Group::digest() const noexcept { return state_->digest; }

Elem Group::mul(Elem a, Elem b) const {
  const auto& st = *state_;
  if (!st.cayley.empty()) return st.cayley[std::size_t{a} * st.order + b];
  return st.impl->mul(a, b);
}

Elem Group::inv(Elem a) const { return state_->inverse[a]; }

Elem Group::pow(Elem a, std::int64_t e) const {
  Elem base = e < 0 ? inv(a) : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-e) : static_cast<std::uint64_t>(e);
  Elem result = identity();
  while (n > 0) {
    if (n & 1u) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::uint32_t Group::element_order(Elem a) const {
  std::uint32_t k = 1;
  Elem x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

bool Group::is_abelian() const {
  const auto& gens = generators();
  for (Elem a : gens) {
    for (Elem b : gens) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> Group::encode(Elem a) const {
  std::vector<int> out;
  state_->impl->encode(a, out);
  return out;
}

Elem Group::decode(std::span<const int> code) const { return state_->impl->decode(code); }

std::string Group::format(Elem a) const { return state_->impl->format(a); }

namespace {

const detail::PermImpl& perm_impl(const detail::GroupState& st) {
  const auto* p = dynamic_cast<const detail::PermImpl*>(st.impl.get());
  if (p == nullptr) throw std::logic_error(st.descriptor.to_string() + " is not a permutation family");
  return *p;
}

const detail::Psl2Impl& psl2_impl(const detail::GroupState& st) {
  const auto* p = dynamic_cast<const detail::Psl2Impl*>(st.impl.get());
  if (p == nullptr) throw std::logic_error(st.descriptor.to_string() + " is not PSL2");
  return *p;
}

}  // namespace

std::uint32_t Group::degree() const { return perm_impl(*state_).degree(); }

const kernels::Perm16& Group::permutation(Elem a) const { return perm_impl(*state_).perm(a); }

Elem Group::index_of_permutation(const kernels::Perm16& p) const { return perm_impl(*state_).index_of(p); }

bool Group::contains_permutation(const kernels::Perm16& p) const { return perm_impl(*state_).find(p).has_value(); }

std::uint32_t Group::fixed_points(Elem a) const {
  const auto& impl = perm_impl(*state_);
  const auto& p = impl.perm(a);
  std::uint32_t f = 0;
  for (std::uint32_t i = 0; i < impl.degree(); ++i) f += p.img[i] == i;
  return f;
}

const Field& Group::field() const { return psl2_impl(*state_).field(); }

std::array<FieldElement, 4> Group::matrix(Elem a) const { return psl2_impl(*state_).matrix(a); }

Elem Group::index_of_matrix(const std::array<FieldElement, 4>& m) const { return psl2_impl(*state_).index_of(m); }

ClosureTester::ClosureTester(const Group& group) : group_(&group), stamp_(group.order(), 0) {
  queue_.reserve(group.order());
}

std::size_t ClosureTester::grow(std::span<const Elem> gens, std::size_t stop_above) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  queue_.push_back(group_->identity());
  stamp_[group_->identity()] = epoch_;
  std::vector<Elem> steps;
  for (Elem g : gens) {
    steps.push_back(g);
    steps.push_back(group_->inv(g));
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const Elem x = queue_[head];
    for (Elem s : steps) {
      const Elem y = group_->mul(x, s);
      if (stamp_[y] != epoch_) {
        stamp_[y] = epoch_;
        queue_.push_back(y);
        if (queue_.size() > stop_above) return queue_.size();
      }
    }
  }
  return queue_.size();
}

std::vector<Elem> ClosureTester::closure(std::span<const Elem> gens) {
  grow(gens, group_->order());
  std::vector<Elem> out = queue_;
  std::sort(out.begin(), out.end());
  return out;
}

bool ClosureTester::generates(std::span<const Elem> gens) {
  const std::size_t n = group_->order();
  if (n == 1) return true;
  // A proper subgroup has index at least 2.
  return grow(gens, n / 2) > n / 2;
}

std::vector<Elem> subgroup_closure(const Group& group, std::span<const Elem> gens) {
  ClosureTester t(group);
  return t.closure(gens);
}

bool is_generating_tuple(const Group& group, std::span<const Elem> tuple) {
  ClosureTester t(group);
  return t.generates(tuple);
}

kernels::Perm16 parse_cycles(std::string_view text, std::uint32_t degree) {
  kernels::Perm16 p = kernels::Perm16::identity();
  std::vector<std::uint32_t> cycle;
  bool open = false;
  std::uint32_t used = 0;
  std::size_t i = 0;
  auto flush = [&]() {
    for (std::size_t k = 0; k < cycle.size(); ++k) p.img[cycle[k]] = static_cast<std::uint8_t>(cycle[(k + 1) % cycle.size()]);
    cycle.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      if (open) throw ParseError("nested '(' in cycle notation", i);
      open = true;
      ++i;
    } else if (c == ')') {
      if (!open) throw ParseError("unbalanced ')' in cycle notation", i);
      open = false;
      flush();
      ++i;
    } else if (c == ' ' || c == ',') {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      if (!open) throw ParseError("point outside a cycle", i);
      std::uint32_t v = 0;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree) throw ParseError("point out of range", start);
      if ((used >> (v - 1)) & 1u) throw ParseError("point repeated", start);
      used |= 1u << (v - 1);
      cycle.push_back(v - 1);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (open) throw ParseError("unterminated cycle", text.size());
  return p;
}

}  // namespace cgw
