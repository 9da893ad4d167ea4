#include "deltaw/weight_expr.hpp"

#include <cctype>
#include <vector>

namespace deltaw {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() const { return pos >= s.size(); }
    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    long long integer(const char* what) {
        skip_ws();
        const std::size_t start = pos;
        if (done() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw WeightParseError(std::string("expected ") + what, pos);
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000)
                throw WeightParseError(std::string(what) + " too large", start);
            ++pos;
        }
        return v;
    }
};

}  // namespace

WeightVector parse_weight_expr(const std::string& text) {
    Cursor c{text};
    std::vector<Rational> entries;

    while (true) {
        c.skip_ws();
        const std::size_t term_start = c.pos;
        long long num = c.integer("numerator");
        long long den = 1;
        c.skip_ws();
        if (c.peek() == '/') {
            ++c.pos;
            const std::size_t den_pos = c.pos;
            den = c.integer("denominator");
            if (den == 0) throw WeightParseError("zero denominator", den_pos);
        }
        long long count = 1;
        c.skip_ws();
        if (c.peek() == '^') {
            ++c.pos;
            const std::size_t cnt_pos = c.pos;
            count = c.integer("count");
            if (count <= 0) throw WeightParseError("count must be positive", cnt_pos);
        }

        Rational w(num, den);
        if (!w.is_positive() || w > Rational(1))
            throw WeightParseError("weight must lie in (0,1]", term_start);
        if (entries.size() + static_cast<std::size_t>(count) > 30)
            throw WeightParseError("too many marks", term_start);
        for (long long i = 0; i < count; ++i) entries.push_back(w);

        c.skip_ws();
        if (c.done()) break;
        if (c.peek() != ',')
            throw WeightParseError("expected ',' between terms", c.pos);
        ++c.pos;
    }

    return WeightVector(std::move(entries));
}

std::string format_weight_expr(const WeightVector& w) {
    std::string out;
    const auto& e = w.entries();
    for (std::size_t i = 0; i < e.size();) {
        std::size_t j = i;
        while (j < e.size() && e[j] == e[i]) ++j;
        if (!out.empty()) out += ",";
        out += e[i].str();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

}  // namespace deltaw
