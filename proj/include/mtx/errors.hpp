#pragma once

#include <stdexcept>
#include <string>

namespace mtx {

/// Library-wide error for violated preconditions and invalid inputs.
class MtxError : public std::runtime_error {
public:
    explicit MtxError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw MtxError(msg);
}

} // namespace mtx
