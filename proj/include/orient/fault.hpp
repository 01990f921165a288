#pragma once

#include <atomic>
#include <string>
#include <string_view>

namespace orient::fault {

// Deliberate defects used to check that the verification suite notices them.
enum class Kind : int {
  none = 0,
  drop_tensor_sign,
  drop_suspension_augmentation,
  omit_p1,
  omit_p2,
  omit_p3,
  omit_p4,
  omit_p5,
  omit_p6,
  omit_p7,
};

inline std::atomic<int>& slot() {
  static std::atomic<int> s{0};
  return s;
}

inline Kind active() { return static_cast<Kind>(slot().load(std::memory_order_relaxed)); }
inline bool is(Kind k) { return active() == k; }

inline bool omits_clause(int clause) {
  return static_cast<int>(active()) == static_cast<int>(Kind::omit_p1) + clause - 1;
}

class Scope {
 public:
  explicit Scope(Kind k) : prev_(slot().exchange(static_cast<int>(k))) {}
  ~Scope() { slot().store(prev_); }
  Scope(const Scope&) = delete;
  Scope& operator=(const Scope&) = delete;

 private:
  int prev_;
};

inline std::string_view name(Kind k) {
  switch (k) {
    case Kind::none: return "none";
    case Kind::drop_tensor_sign: return "drop-tensor-sign";
    case Kind::drop_suspension_augmentation: return "drop-suspension-augmentation";
    case Kind::omit_p1: return "omit-p1";
    case Kind::omit_p2: return "omit-p2";
    case Kind::omit_p3: return "omit-p3";
    case Kind::omit_p4: return "omit-p4";
    case Kind::omit_p5: return "omit-p5";
    case Kind::omit_p6: return "omit-p6";
    case Kind::omit_p7: return "omit-p7";
  }
  return "?";
}

}  // namespace orient::fault
