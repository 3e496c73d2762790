#pragma once

#include "ordwalk/ordinal.hpp"

#include <map>

namespace ordwalk {

// Finitely supported integer combination of ordinal-tuple generators.
// Zero coefficients are never stored.
class FormalSum {
public:
    FormalSum() = default;

    void add(const OrdTuple& key, long long coeff) {
        if (coeff == 0) return;
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(key, coeff);
            return;
        }
        it->second += coeff;
        if (it->second == 0) coeffs_.erase(it);
    }

    bool is_zero() const { return coeffs_.empty(); }
    const std::map<OrdTuple, long long>& coeffs() const { return coeffs_; }

    FormalSum& operator+=(const FormalSum& o) {
        for (const auto& [k, v] : o.coeffs_) add(k, v);
        return *this;
    }
    FormalSum& operator-=(const FormalSum& o) {
        for (const auto& [k, v] : o.coeffs_) add(k, -v);
        return *this;
    }
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend bool operator==(const FormalSum& a, const FormalSum& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    std::map<OrdTuple, long long> coeffs_;
};

} // namespace ordwalk
