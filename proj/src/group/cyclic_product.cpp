#include <sstream>

#include "cgw/error.hpp"
#include "group_impl.hpp"

namespace cgw::detail {

std::vector<Elem> CyclicImpl::generators() const {
  if (m_ == 1) return {};
  return {1};
}

Elem CyclicImpl::decode(std::span<const int> code) const {
  if (code.size() != 1 || code[0] < 0 || static_cast<std::uint32_t>(code[0]) >= m_) {
    throw std::invalid_argument("cyclic code out of range");
  }
  return static_cast<Elem>(code[0]);
}

std::string CyclicImpl::format(Elem a) const { return std::to_string(a); }

ProductImpl::ProductImpl(std::vector<std::shared_ptr<const GroupImpl>> factors) : factors_(std::move(factors)) {
  stride_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size(); i-- > 0;) {
    stride_[i] = order_;
    order_ *= factors_[i]->order();
  }
}

std::vector<Elem> ProductImpl::split(Elem a) const {
  std::vector<Elem> parts(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    parts[i] = static_cast<Elem>((a / stride_[i]) % factors_[i]->order());
  }
  return parts;
}

Elem ProductImpl::join(const std::vector<Elem>& parts) const {
  std::size_t a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) a += parts[i] * stride_[i];
  return static_cast<Elem>(a);
}

Elem ProductImpl::mul(Elem a, Elem b) const {
  auto pa = split(a);
  const auto pb = split(b);
  for (std::size_t i = 0; i < factors_.size(); ++i) pa[i] = factors_[i]->mul(pa[i], pb[i]);
  return join(pa);
}

Elem ProductImpl::inv(Elem a) const {
  auto pa = split(a);
  for (std::size_t i = 0; i < factors_.size(); ++i) pa[i] = factors_[i]->inv(pa[i]);
  return join(pa);
}

std::vector<Elem> ProductImpl::generators() const {
  std::vector<Elem> gens;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    for (Elem g : factors_[i]->generators()) {
      std::vector<Elem> parts(factors_.size(), 0);
      parts[i] = g;
      gens.push_back(join(parts));
    }
  }
  return gens;
}

std::size_t ProductImpl::encode_length() const {
  std::size_t n = 0;
  for (const auto& f : factors_) n += f->encode_length();
  return n;
}

void ProductImpl::encode(Elem a, std::vector<int>& out) const {
  const auto parts = split(a);
  for (std::size_t i = 0; i < factors_.size(); ++i) factors_[i]->encode(parts[i], out);
}

Elem ProductImpl::decode(std::span<const int> code) const {
  if (code.size() != encode_length()) throw std::invalid_argument("product code has wrong length");
  std::vector<Elem> parts(factors_.size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const std::size_t len = factors_[i]->encode_length();
    parts[i] = factors_[i]->decode(code.subspan(offset, len));
    offset += len;
  }
  return join(parts);
}

std::string ProductImpl::format(Elem a) const {
  const auto parts = split(a);
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ", ";
    os << factors_[i]->format(parts[i]);
  }
  os << ")";
  return os.str();
}

}  // namespace cgw::detail
