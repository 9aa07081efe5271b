#include <cctype>
#include <string>

#include "griess/error.hpp"
#include "griess/root_system.hpp"

namespace griess {
namespace {

int read_number(std::string_view text, std::size_t& pos) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
        ++pos;
    }
    if (pos == start || pos - start > 6) {
        throw InvalidArgument("system spec '" + std::string(text) + "': expected a number at offset " +
                              std::to_string(start));
    }
    return std::stoi(std::string(text.substr(start, pos - start)));
}

}  // namespace

std::vector<SimpleType> parse_system_spec(std::string_view text) {
    std::vector<SimpleType> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (!out.empty() && text[pos] == '+') {
            ++pos;
        }
        if (pos >= text.size()) {
            throw InvalidArgument("system spec '" + std::string(text) + "': trailing '+'");
        }
        SimpleType t;
        switch (text[pos]) {
            case 'A': t.family = Family::A; break;
            case 'D': t.family = Family::D; break;
            case 'E': t.family = Family::E; break;
            default:
                throw InvalidArgument("system spec '" + std::string(text) + "': unknown family '" +
                                      std::string(1, text[pos]) + "'");
        }
        ++pos;
        t.rank = read_number(text, pos);
        t.validate();
        int count = 1;
        if (pos < text.size() && (text[pos] == '^' || text[pos] == '*')) {
            ++pos;
            count = read_number(text, pos);
            if (count < 1) {
                throw InvalidArgument("system spec '" + std::string(text) + "': multiplicity must be positive");
            }
        }
        out.insert(out.end(), static_cast<std::size_t>(count), t);
    }
    if (out.empty()) {
        throw InvalidArgument("empty system spec");
    }
    return out;
}

std::string format_system_spec(const std::vector<SimpleType>& components) {
    std::string out;
    for (std::size_t i = 0; i < components.size();) {
        std::size_t j = i;
        while (j < components.size() && components[j] == components[i]) {
            ++j;
        }
        if (!out.empty()) {
            out += '+';
        }
        out += components[i].name();
        if (j - i > 1) {
            out += '^' + std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

}  // namespace griess
