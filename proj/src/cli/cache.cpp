#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cgw/cli.hpp"
#include "cgw/error.hpp"
#include "cgw/spectral.hpp"

namespace cgw::cli {

namespace {

constexpr const char* kMagic = "cgw-character-table";

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t x) {
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << x;
  return o.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    if (end == std::string::npos) return out;
    pos = end + 1;
  }
}

std::uint64_t to_u64(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw VerificationError("cache record: bad number '" + s + "'");
  return v;
}

// Exclusive advisory lock on <dir>/.lock for the lifetime of the object.
class DirLock {
 public:
  explicit DirLock(const std::filesystem::path& dir) {
    fd_ = ::open((dir / ".lock").c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~DirLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

}  // namespace

std::string serialize_table(const Group& group, const ClassData& classes, const CharacterTable& t, int version) {
  std::ostringstream o;
  o << kMagic << '\t' << version << '\n';
  o << "group\t" << group.name() << '\n';
  o << "digest\t" << hex(group.digest()) << '\n';
  o << "order\t" << t.group_order << '\n';
  o << "classes\t" << classes.count() << '\n';
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const auto& cl = classes.classes[c];
    o << "class\t" << c << '\t' << cl.representative << '\t' << cl.size << '\t' << cl.element_order << '\t'
      << classes.inverse_class[c] << '\n';
  }
  o << "exponent\t" << t.exponent << '\n';
  o << "prime\t" << t.prime << '\n';
  o << "root\t" << t.root << '\n';
  o << "degrees";
  for (auto d : t.degrees) o << '\t' << d;
  o << '\n';
  for (std::size_t chi = 0; chi < t.count(); ++chi)
    for (std::size_t c = 0; c < t.class_count(); ++c) {
      o << "mult\t" << chi << '\t' << c << '\t';
      for (std::size_t j = 0; j < t.mult[chi][c].size(); ++j) o << (j ? "," : "") << t.mult[chi][c][j];
      o << '\n';
    }
  std::string body = o.str();
  return body + "checksum\t" + hex(fnv1a(body)) + '\n';
}

CharacterTable deserialize_table(const std::string& text, const Group& group, const ClassData& classes, int version) {
  const std::size_t cut = text.rfind("checksum\t");
  if (cut == std::string::npos) throw VerificationError("cache record: missing checksum");
  const std::string body = text.substr(0, cut);
  std::string tail = text.substr(cut + 9);
  while (!tail.empty() && (tail.back() == '\n' || tail.back() == '\r')) tail.pop_back();
  if (tail != hex(fnv1a(body))) throw VerificationError("cache record: checksum mismatch");

  std::istringstream in(body);
  std::string line;
  auto next = [&](const char* key) {
    if (!std::getline(in, line)) throw VerificationError(std::string("cache record: missing ") + key);
    auto f = split(line, '\t');
    if (f.empty() || f[0] != key) throw VerificationError(std::string("cache record: expected ") + key);
    return f;
  };
  auto f = next(kMagic);
  if (f.size() != 2 || to_u64(f[1]) != static_cast<std::uint64_t>(version))
    throw VerificationError("cache record: format version " + (f.size() > 1 ? f[1] : "?") + ", expected " +
                            std::to_string(version));
  if (next("group").at(1) != group.name()) throw VerificationError("cache record: group differs");
  if (next("digest").at(1) != hex(group.digest())) throw VerificationError("cache record: digest mismatch");

  CharacterTable t;
  t.group_order = to_u64(next("order").at(1));
  if (t.group_order != group.order()) throw VerificationError("cache record: order differs");
  const std::size_t k = to_u64(next("classes").at(1));
  if (k != classes.count()) throw VerificationError("cache record: class count differs");
  for (std::size_t c = 0; c < k; ++c) {
    f = next("class");
    const auto& cl = classes.classes[c];
    if (f.size() != 6 || to_u64(f[1]) != c || to_u64(f[2]) != cl.representative || to_u64(f[3]) != cl.size ||
        to_u64(f[4]) != cl.element_order || to_u64(f[5]) != classes.inverse_class[c])
      throw VerificationError("cache record: class ordering differs at class " + std::to_string(c));
    t.class_sizes.push_back(cl.size);
    t.class_orders.push_back(cl.element_order);
    t.inverse_class.push_back(classes.inverse_class[c]);
  }
  t.exponent = static_cast<std::uint32_t>(to_u64(next("exponent").at(1)));
  t.prime = static_cast<std::uint32_t>(to_u64(next("prime").at(1)));
  t.root = static_cast<std::uint32_t>(to_u64(next("root").at(1)));
  f = next("degrees");
  if (f.size() != k + 1) throw VerificationError("cache record: degree count differs");
  for (std::size_t i = 1; i < f.size(); ++i) t.degrees.push_back(static_cast<std::uint32_t>(to_u64(f[i])));
  t.mult.assign(k, std::vector<std::vector<std::uint32_t>>(k));
  for (std::size_t chi = 0; chi < k; ++chi)
    for (std::size_t c = 0; c < k; ++c) {
      f = next("mult");
      if (f.size() != 4 || to_u64(f[1]) != chi || to_u64(f[2]) != c) throw VerificationError("cache record: bad mult row");
      for (const auto& m : split(f[3], ',')) t.mult[chi][c].push_back(static_cast<std::uint32_t>(to_u64(m)));
      if (t.mult[chi][c].size() != t.class_orders[c]) throw VerificationError("cache record: bad mult length");
    }
  if (std::getline(in, line)) throw VerificationError("cache record: trailing data");
  refresh_float_mirror(t);
  return t;
}

TableCache::TableCache(std::filesystem::path dir, int version) : dir_(std::move(dir)), version_(version) {}

std::filesystem::path TableCache::record_path(const Group& group) const {
  return dir_ / ("table-" + hex(group.digest()) + ".tsv");
}

CharacterTable TableCache::get(const Group& group, const ClassData& classes, CacheStatus& status,
                               std::vector<std::string>& warnings) const {
  std::filesystem::create_directories(dir_);
  DirLock lock(dir_);
  const auto path = record_path(group);
  status = CacheStatus::miss;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      CharacterTable t = deserialize_table(buf.str(), group, classes, version_);
      status = CacheStatus::hit;
      return t;
    } catch (const VerificationError& e) {
      warnings.push_back("cache record " + path.filename().string() + " rejected (" + e.what() + "); recomputing");
      status = CacheStatus::recomputed;
    }
  }
  CharacterTable t = character_table(group, classes);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << serialize_table(group, classes, t, version_);
    if (!out) throw Error("cannot write cache record " + tmp);
  }
  std::filesystem::rename(tmp, path);
  return t;
}

RoundtripCheck cache_roundtrip(const Group& group, const std::filesystem::path& dir) {
  const ClassData classes = conjugacy_classes(group);
  const CharacterTable fresh = character_table(group, classes);
  const TableCache cache(dir);
  std::filesystem::create_directories(dir);
  std::filesystem::remove(cache.record_path(group));
  CacheStatus status;
  std::vector<std::string> warnings;
  cache.get(group, classes, status, warnings);
  const CharacterTable loaded = cache.get(group, classes, status, warnings);

  RoundtripCheck r;
  r.exact_data = status == CacheStatus::hit &&
                 serialize_table(group, classes, fresh) == serialize_table(group, classes, loaded) &&
                 fresh.degrees == loaded.degrees && fresh.mult == loaded.mult && fresh.prime == loaded.prime &&
                 fresh.root == loaded.root && fresh.real == loaded.real;
  const auto a = delta_epsilon(fresh), b = delta_epsilon(loaded);
  r.downstream = a.zeta2 == b.zeta2 && a.delta == b.delta && a.epsilon == b.epsilon &&
                 frobenius_fibers(fresh).counts == frobenius_fibers(loaded).counts &&
                 squares_word_fibers(fresh).counts == squares_word_fibers(loaded).counts &&
                 fresh.values == loaded.values;
  return r;
}

}  // namespace cgw::cli
