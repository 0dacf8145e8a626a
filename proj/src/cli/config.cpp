#include <charconv>
#include <map>
#include <stdexcept>

#include "cgw/cli.hpp"
#include "cgw/error.hpp"

namespace cgw::cli {

namespace {

std::string shortest(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T v{};
  const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size())
    throw ParseError("bad value for " + key + ": '" + text + "'", 0);
  return v;
}

}  // namespace

std::string RunConfig::canonical() const {
  std::string out;
  auto add = [&](const char* key, const std::string& value) {
    if (!out.empty()) out += ';';
    out += key;
    out += '=';
    out += value;
  };
  add("command", command);
  add("group", group);
  add("word", word);
  add("mode", mode);
  add("k", std::to_string(k));
  add("s", shortest(s));
  add("epsilon", epsilon ? shortest(*epsilon) : "");
  add("seed", std::to_string(seed));
  add("steps", std::to_string(steps));
  add("burn_in", std::to_string(burn_in));
  add("samples", std::to_string(samples));
  add("format", format);
  return out;
}

RunConfig RunConfig::from_canonical(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(';', pos), text.size());
    const std::string item = text.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("missing '=' in '" + item + "'", pos);
    kv[item.substr(0, eq)] = item.substr(eq + 1);
    pos = end + 1;
  }
  RunConfig c;
  auto take = [&](const char* key) -> std::string {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(std::string("missing key ") + key, 0);
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  c.command = take("command");
  c.group = take("group");
  c.word = take("word");
  c.mode = take("mode");
  c.k = parse_number<std::uint32_t>("k", take("k"));
  c.s = parse_number<double>("s", take("s"));
  if (const std::string e = take("epsilon"); !e.empty()) c.epsilon = parse_number<double>("epsilon", e);
  c.seed = parse_number<std::uint64_t>("seed", take("seed"));
  c.steps = parse_number<std::uint64_t>("steps", take("steps"));
  c.burn_in = parse_number<std::uint64_t>("burn_in", take("burn_in"));
  c.samples = parse_number<std::uint64_t>("samples", take("samples"));
  c.format = take("format");
  if (!kv.empty()) throw ParseError("unknown key " + kv.begin()->first, 0);
  return c;
}

std::string to_string(CacheStatus status) {
  switch (status) {
    case CacheStatus::disabled: return "disabled";
    case CacheStatus::hit: return "hit";
    case CacheStatus::miss: return "miss";
    case CacheStatus::recomputed: return "recomputed";
  }
  return "?";
}

}  // namespace cgw::cli
