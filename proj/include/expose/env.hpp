#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace expose {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct IllegalActionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TerminalStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct GenerationExhaustedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSparsityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct AllIllegalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnexpandedNodeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EmptyDatasetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct OffCycleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ZeroProbabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Core types
// ---------------------------------------------------------------------------

/// Canonical byte encoding of a state. Injective over reachable states of an
/// instance; prefixed with the instance's immutable ID hash so counts keyed by
/// StateKey never collide across instances.
using StateKey = std::string;

struct Transition {
  StateKey next_state;
  double reward = 0.0;
  bool terminal = false;
};

/// Ordered list of legal action indices, subset of 0..max_actions-1.
struct ActionSet {
  std::vector<int> actions;
};

/// Feature vector with a cached list of nonzero indices. The planes used by
/// the grid environment are mostly zeros; dot products and outer products
/// iterate the nonzero list, which is exactly equivalent to the dense sum.
struct Features {
  std::vector<double> values;
  std::vector<int> nonzero;

  Features() = default;
  explicit Features(std::vector<double> v) : values(std::move(v)) {
    for (size_t i = 0; i < values.size(); ++i)
      if (values[i] != 0.0) nonzero.push_back(static_cast<int>(i));
  }

  size_t size() const { return values.size(); }
  double operator[](size_t i) const { return values[i]; }
};

/// Deterministic black-box simulator contract consumed by every engine.
/// Instances are immutable after construction; step is pure given
/// (state, action), so one environment can be shared read-only across
/// concurrent searches.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;

  /// Fixed action-head width A_max: the policy emits this many logits and
  /// masks illegal entries.
  virtual int max_actions() const = 0;
  virtual int feature_count() const = 0;

  virtual StateKey initial_state() const = 0;
  virtual bool is_terminal(const StateKey& s) const = 0;
  /// True for terminal states that count as solved (goal reached / cycle
  /// closed), false for dead ends and non-terminal states.
  virtual bool is_success(const StateKey& s) const = 0;

  /// Throws TerminalStateError when queried on a terminal state; no engine
  /// may ever trigger that.
  virtual ActionSet legal_actions(const StateKey& s) const = 0;

  /// Throws IllegalActionError / TerminalStateError on contract violations.
  virtual Transition step(const StateKey& s, int action) const = 0;

  virtual Features features(const StateKey& s) const = 0;

  /// Domain heuristic state value; stands in for an offline-learnt value
  /// function.
  virtual double heuristic_value(const StateKey& s) const = 0;

  /// Default trajectory horizon / episode step cap for this instance.
  virtual int default_horizon() const = 0;

  /// Legality mask of width max_actions().
  std::vector<uint8_t> legal_mask(const StateKey& s) const {
    std::vector<uint8_t> mask(static_cast<size_t>(max_actions()), 0);
    for (int a : legal_actions(s).actions) mask[static_cast<size_t>(a)] = 1;
    return mask;
  }
};

// ---------------------------------------------------------------------------
// Key encoding helpers
// ---------------------------------------------------------------------------

namespace keyenc {

inline void put_u16(std::string& out, uint16_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
}

inline void put_u32(std::string& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline void put_u64(std::string& out, uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline uint16_t get_u16(const std::string& s, size_t off) {
  return static_cast<uint16_t>(static_cast<uint8_t>(s[off]) |
                               (static_cast<uint16_t>(static_cast<uint8_t>(s[off + 1])) << 8));
}

inline uint32_t get_u32(const std::string& s, size_t off) {
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(static_cast<uint8_t>(s[off + i])) << (8 * i);
  return v;
}

inline uint64_t get_u64(const std::string& s, size_t off) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(static_cast<uint8_t>(s[off + i])) << (8 * i);
  return v;
}

/// FNV-1a 64-bit; used for instance ID hashes.
inline uint64_t fnv1a(const std::string& data) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Assembles a key: u32 payload length, u64 instance hash, payload bytes.
inline StateKey make_key(uint64_t instance_hash, const std::string& payload) {
  StateKey key;
  key.reserve(12 + payload.size());
  put_u32(key, static_cast<uint32_t>(8 + payload.size()));
  put_u64(key, instance_hash);
  key += payload;
  return key;
}

inline uint64_t key_instance_hash(const StateKey& key) { return get_u64(key, 4); }

inline std::string key_payload(const StateKey& key) { return key.substr(12); }

inline std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xf]);
  }
  return out;
}

inline std::string from_hex(const std::string& hex) {
  auto nib = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("from_hex: bad digit");
  };
  std::string out;
  out.reserve(hex.size() / 2);
  for (size_t i = 0; i + 1 < hex.size(); i += 2)
    out.push_back(static_cast<char>((nib(hex[i]) << 4) | nib(hex[i + 1])));
  return out;
}

}  // namespace keyenc

}  // namespace expose
