#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quartic/core/error.hpp"

namespace quartic {

/// Ordered list of variable names. Interned, so two polynomials share a
/// variable set exactly when their VarSet pointers agree.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index_of(const std::string& n) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return -1;
    }
    std::size_t index(const std::string& n) const {
        int i = index_of(n);
        if (i < 0) fail(ErrorKind::InvalidArgument, "unknown variable '" + n + "'");
        return static_cast<std::size_t>(i);
    }

private:
    std::vector<std::string> names_;
};

inline const VarSet* varset(const std::vector<std::string>& names) {
    static std::mutex mu;
    static std::map<std::vector<std::string>, std::unique_ptr<VarSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[names];
    if (!slot) slot = std::make_unique<VarSet>(names);
    return slot.get();
}

inline const VarSet* vars_xyz() { return varset({"x", "y", "z"}); }
inline const VarSet* vars_uvw() { return varset({"u", "v", "w"}); }
inline const VarSet* vars_yz() { return varset({"y", "z"}); }
inline const VarSet* vars_uv() { return varset({"u", "v"}); }

} // namespace quartic
