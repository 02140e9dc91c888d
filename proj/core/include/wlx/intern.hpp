// Exact color interning. Every WL-style update and feature constructor builds
// a structured byte key and asks the table for a dense id; equal keys get
// equal ids, distinct keys distinct ids. Comparing colors across two graphs is
// only meaningful when both were produced through the same table (a "session").
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace wlx {

// Append-only builder for intern keys. Values are written varint-style after
// a zig-zag map so negative sentinels stay compact; tags keep differently
// shaped keys from colliding.
class KeyBuf {
 public:
  void tag(char t) { bytes_.push_back(t); }

  void put(std::int64_t v) {
    std::uint64_t u =
        (static_cast<std::uint64_t>(v) << 1) ^ static_cast<std::uint64_t>(v >> 63);
    while (u >= 0x80) {
      bytes_.push_back(static_cast<char>((u & 0x7f) | 0x80));
      u >>= 7;
    }
    bytes_.push_back(static_cast<char>(u));
  }

  void put_all(const std::vector<int>& vs) {
    put(static_cast<std::int64_t>(vs.size()));
    for (int v : vs) put(v);
  }

  void put_raw(const std::string& s) {
    put(static_cast<std::int64_t>(s.size()));
    bytes_.append(s);
  }

  const std::string& str() const { return bytes_; }

 private:
  std::string bytes_;
};

class InternTable {
 public:
  // Reserved id for readouts of runs whose root was removed.
  static constexpr int kRootRemoved = 0;

  InternTable() {
    KeyBuf kb;
    kb.tag('!');
    kb.put_raw("root-removed");
    id_for(kb);  // occupies id 0
  }

  int id_for(const KeyBuf& kb) { return id_for_bytes(kb.str()); }

  int id_for_bytes(const std::string& key) {
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(ids_.size());
    ids_.emplace(key, id);
    return id;
  }

  std::size_t size() const { return ids_.size(); }

 private:
  std::unordered_map<std::string, int> ids_;
};

}  // namespace wlx
