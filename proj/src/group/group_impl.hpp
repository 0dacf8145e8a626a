#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgw/group.hpp"

namespace cgw::detail {

class GroupImpl {
 public:
  virtual ~GroupImpl() = default;

  virtual std::size_t order() const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  virtual std::vector<Elem> generators() const = 0;
  virtual std::size_t encode_length() const = 0;
  virtual void encode(Elem a, std::vector<int>& out) const = 0;
  virtual Elem decode(std::span<const int> code) const = 0;
  virtual std::string format(Elem a) const = 0;
};

class PermImpl final : public GroupImpl {
 public:
  PermImpl(std::uint32_t degree, bool alternating);

  std::size_t order() const override { return elements_.size(); }
  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override { return index_of(invert(elements_[a])); }
  std::vector<Elem> generators() const override;
  std::size_t encode_length() const override { return degree_; }
  void encode(Elem a, std::vector<int>& out) const override;
  Elem decode(std::span<const int> code) const override;
  std::string format(Elem a) const override;

  std::uint32_t degree() const noexcept { return degree_; }
  const kernels::Perm16& perm(Elem a) const { return elements_[a]; }
  std::optional<Elem> find(const kernels::Perm16& p) const;
  Elem index_of(const kernels::Perm16& p) const;
  kernels::Perm16 invert(const kernels::Perm16& p) const;

 private:
  std::uint32_t degree_;
  bool alternating_;
  std::vector<kernels::Perm16> elements_;
  std::vector<std::int32_t> rank_to_index_;  // lexicographic rank in S_n -> index or -1

  std::uint32_t rank(const kernels::Perm16& p) const;
};

class Psl2Impl final : public GroupImpl {
 public:
  explicit Psl2Impl(std::uint32_t q);

  std::size_t order() const override { return elements_.size(); }
  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;
  std::vector<Elem> generators() const override;
  std::size_t encode_length() const override { return 4; }
  void encode(Elem a, std::vector<int>& out) const override;
  Elem decode(std::span<const int> code) const override;
  std::string format(Elem a) const override;

  const Field& field() const noexcept { return field_; }
  const std::array<FieldElement, 4>& matrix(Elem a) const { return elements_[a]; }
  Elem index_of(const std::array<FieldElement, 4>& m) const;

 private:
  Field field_;
  std::vector<std::array<FieldElement, 4>> elements_;
  std::vector<std::int32_t> key_to_index_;  // q^4 entries; M and -M map to the same index

  std::size_t key(const std::array<FieldElement, 4>& m) const;
};

class CyclicImpl final : public GroupImpl {
 public:
  explicit CyclicImpl(std::uint32_t m) : m_(m) {}

  std::size_t order() const override { return m_; }
  Elem mul(Elem a, Elem b) const override { return static_cast<Elem>((std::uint64_t{a} + b) % m_); }
  Elem inv(Elem a) const override { return a == 0 ? 0 : m_ - a; }
  std::vector<Elem> generators() const override;
  std::size_t encode_length() const override { return 1; }
  void encode(Elem a, std::vector<int>& out) const override { out.push_back(static_cast<int>(a)); }
  Elem decode(std::span<const int> code) const override;
  std::string format(Elem a) const override;

 private:
  std::uint32_t m_;
};

class ProductImpl final : public GroupImpl {
 public:
  explicit ProductImpl(std::vector<std::shared_ptr<const GroupImpl>> factors);

  std::size_t order() const override { return order_; }
  Elem mul(Elem a, Elem b) const override;
  Elem inv(Elem a) const override;
  std::vector<Elem> generators() const override;
  std::size_t encode_length() const override;
  void encode(Elem a, std::vector<int>& out) const override;
  Elem decode(std::span<const int> code) const override;
  std::string format(Elem a) const override;

 private:
  std::vector<std::shared_ptr<const GroupImpl>> factors_;
  std::vector<std::size_t> stride_;  // mixed radix, last factor fastest
  std::size_t order_ = 1;

  std::vector<Elem> split(Elem a) const;
  Elem join(const std::vector<Elem>& parts) const;
};

std::shared_ptr<const GroupImpl> make_impl(const GroupDescriptor& d);

struct GroupState {
  GroupDescriptor descriptor;
  std::shared_ptr<const GroupImpl> impl;
  std::size_t order = 0;
  std::vector<Elem> inverse;
  std::vector<Elem> generators;
  std::vector<std::uint16_t> cayley;  // row-major, empty when |G| > kCayleyCap
  std::uint64_t digest = 0;
};

inline constexpr std::size_t kCayleyCap = 2048;

}  // namespace cgw::detail
