#include "fairgame/errors.hpp"

#include <sstream>

namespace fairgame {

std::string ModelError::format(const std::string& what, int line, int column) {
    std::ostringstream out;
    out << "line " << line << ":" << column << ": " << what;
    return out.str();
}

namespace {

std::string not_stopping_message(const std::vector<int>& witness) {
    std::ostringstream out;
    out << "game is not stopping under fairness; Max can avoid terminals from " << witness.size()
        << " vertex" << (witness.size() == 1 ? "" : "es") << " {";
    for (size_t i = 0; i < witness.size() && i < 16; ++i) {
        if (i) out << ", ";
        out << witness[i];
    }
    if (witness.size() > 16) out << ", ...";
    out << "}";
    return out.str();
}

}  // namespace

NotStoppingError::NotStoppingError(std::vector<int> witness)
    : std::runtime_error(not_stopping_message(witness)), witness(std::move(witness)) {}

}  // namespace fairgame
