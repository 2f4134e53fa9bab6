#include "ocring/tate.hpp"

#include <sstream>

namespace ocring {

std::string mono_str(const Monomial& m) {
    if (mono_is_one(m)) return "1";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!first) os << "*";
        os << "X" << i;
        if (m[i] != 1) os << "^" << m[i];
        first = false;
    }
    return os.str();
}

std::string ExtendedLT::str() const {
    std::ostringstream os;
    os << "(v=(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "), " << mono_str(deg) << ")";
    return os.str();
}

} // namespace ocring
