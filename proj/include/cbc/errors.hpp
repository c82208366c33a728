#pragma once

#include <stdexcept>
#include <string>

namespace cbc {

struct NotPrimePower : std::invalid_argument {
    explicit NotPrimePower(long long q)
        : std::invalid_argument("q = " + std::to_string(q) + " is not a prime power") {}
};

struct BlockSizeTooLarge : std::invalid_argument {
    BlockSizeTooLarge(int ell, int q)
        : std::invalid_argument("block size ell = " + std::to_string(ell) +
                                " exceeds group size q = " + std::to_string(q)) {}
};

struct QTooSmall : std::invalid_argument {
    QTooSmall(int q, int min_q)
        : std::invalid_argument("q = " + std::to_string(q) + " too small, need q >= " +
                                std::to_string(min_q)) {}
};

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRange : std::invalid_argument {
    explicit OutOfRange(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cbc
