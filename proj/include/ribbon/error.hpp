#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ribbon {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (bad directive, bad token shape).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Well-formed input that violates a structural invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An exhaustive search hit its edge or time limit before deciding.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Edge labels and vertex ids are nonempty tokens over [A-Za-z0-9_].
inline bool is_token(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok)
            return false;
    }
    return true;
}

inline void require_token(std::string_view s, std::string_view what)
{
    if (!is_token(s))
        throw ValidationError(std::string("invalid ") + std::string(what) + " '" + std::string(s) + "'");
}

} // namespace ribbon
