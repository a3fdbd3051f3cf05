#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace qcover {

/// Map with atomic get-or-compute.  Concurrent requests for the same key wait
/// for a single computation; values are immutable once stored.
template <class K, class V>
class MemoTable {
 public:
  V get_or_compute(const K& key, const std::function<V()>& compute) {
    std::shared_ptr<Slot> slot;
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto& s = table_[key];
      if (!s) s = std::make_shared<Slot>();
      slot = s;
    }
    std::call_once(slot->once, [&] {
      try {
        slot->value = std::make_shared<const V>(compute());
      } catch (...) {
        slot->error = std::current_exception();
      }
    });
    if (slot->error) std::rethrow_exception(slot->error);
    return *slot->value;
  }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return table_.size();
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mu_);
    table_.clear();
  }

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const V> value;
    std::exception_ptr error;
  };
  mutable std::mutex mu_;
  std::map<K, std::shared_ptr<Slot>> table_;
};

}  // namespace qcover
