#ifndef NCMOT_RATIONAL_HPP
#define NCMOT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ncmot {

// Exact rational scalar. All arithmetic in the engine goes through this
// type; there is no floating point anywhere.
using Rational = mpq_class;

// Typed error carrying a stable machine-readable code ("CyclicQuiver",
// "NotAComplex", ...) next to the human message. The CLI maps codes to
// exit statuses.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

inline Rational rat_parse(const std::string& text)
{
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw Error("BadRational", "cannot parse rational '" + text + "'");
    if (q.get_den() == 0)
        throw Error("BadRational", "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical form "p/q", or just "p" when the denominator is 1. rat_parse
// round-trips this exactly.
inline std::string rat_print(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace ncmot

#endif
