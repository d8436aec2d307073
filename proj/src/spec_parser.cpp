#include "odgraph/spec_parser.hpp"

#include <cctype>
#include <limits>
#include <vector>

namespace od {

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    GroupSpec parse() {
        std::vector<GroupSpec> atoms{atom()};
        skip_space();
        while (pos_ < text_.size()) {
            if (lower(text_[pos_]) != 'x') fail("expected 'x' or end of input");
            ++pos_;
            atoms.push_back(atom());
            skip_space();
        }
        return GroupSpec::product(std::move(atoms));
    }

private:
    static char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }

    [[noreturn]] void fail(const std::string& message) const { throw SpecSyntaxError(message, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    GroupSpec atom() {
        skip_space();
        if (pos_ >= text_.size()) fail("expected group family 'Z', 'D' or 'U'");
        const char family = lower(text_[pos_]);
        if (family != 'z' && family != 'd' && family != 'u') {
            fail("expected group family 'Z', 'D' or 'U'");
        }
        ++pos_;
        const Natural n = number();
        switch (family) {
            case 'z':
                if (n < 1) throw SpecConstraintError("cyclic group Z_n requires n >= 1");
                return GroupSpec::cyclic(n);
            case 'd':
                if (n < 3) throw SpecConstraintError("dihedral group D_n requires n >= 3");
                return GroupSpec::dihedral(n);
            default:
                if (n < 2) throw SpecConstraintError("unit group U(n) requires n >= 2");
                return GroupSpec::units(n);
        }
    }

    Natural number() {
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected decimal number");
        }
        Natural value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const Natural digit = static_cast<Natural>(text_[pos_] - '0');
            if (value > (std::numeric_limits<Natural>::max() - digit) / 10) {
                throw SpecConstraintError("group parameter exceeds 64-bit range");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace od
