#ifndef VENKIT_FORMAT_HPP
#define VENKIT_FORMAT_HPP

#include <string>
#include <string_view>

#include "venkit/poly.hpp"
#include "venkit/polymap.hpp"

namespace venkit {

class parse_error : public error {
public:
    parse_error(int line, int col, const std::string& msg)
        : error("parse error at " + std::to_string(line) + ":" +
                std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_, col_;
};

// Canonical text format. Terms are printed grlex-descending and joined
// with " + " / " - "; a coefficient of magnitude 1 is omitted in front of
// a nonconstant monomial; unit exponents are omitted. The printer and
// parser are mutually inverse on canonical strings and values.

std::string to_string(const Poly& p);
std::string ring_header(const RingSpec& ring);
std::string to_string(const PolyMap& m);

Ring parse_ring_header(std::string_view line, int line_no = 1);
Poly parse_poly(const Ring& ring, std::string_view text, int line_no = 1,
                int col0 = 0);
PolyMap parse_map(std::string_view text);

}  // namespace venkit

#endif
