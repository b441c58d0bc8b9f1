#pragma once

#include <stdexcept>
#include <string>

namespace rtab {

enum class errc {
    not_lattice_word,
    index_out_of_range,
    not_richardson,
    not_prime,
    largest_letter_too_small,
    letter_mismatch,
    size_limit_exceeded,
    invalid_code,
    size_mismatch,
    not_comparable,
    not_hook_shape,
    entry_out_of_range,
    element_out_of_range,
    empty_word,
    invalid_argument,
    internal,
};

const char* errc_name(errc c);

class error : public std::runtime_error {
public:
    error(errc c, const std::string& detail)
        : std::runtime_error(std::string(errc_name(c)) + ": " + detail), code_(c) {}
    explicit error(errc c) : std::runtime_error(errc_name(c)), code_(c) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc c, const std::string& detail) { throw error(c, detail); }
[[noreturn]] inline void fail(errc c) { throw error(c); }

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::not_lattice_word: return "NotLatticeWord";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::not_richardson: return "NotRichardson";
    case errc::not_prime: return "NotPrime";
    case errc::largest_letter_too_small: return "LargestLetterTooSmall";
    case errc::letter_mismatch: return "LetterMismatch";
    case errc::size_limit_exceeded: return "SizeLimitExceeded";
    case errc::invalid_code: return "InvalidCode";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::not_comparable: return "NotComparable";
    case errc::not_hook_shape: return "NotHookShape";
    case errc::entry_out_of_range: return "EntryOutOfRange";
    case errc::element_out_of_range: return "ElementOutOfRange";
    case errc::empty_word: return "EmptyWord";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::internal: return "Internal";
    }
    return "Internal";
}

} // namespace rtab
