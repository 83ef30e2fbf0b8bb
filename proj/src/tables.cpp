#include "trigal/error.hpp"
#include "trigal/sampler.hpp"
#include "trigal/upoly.hpp"

#include <algorithm>
#include <cctype>

namespace trigal {

namespace {

struct Table2Entry {
    const char* polynomial;
    const char* field_label;
    const char* field_spec;
    int n;
    int m;
    const char* a;
    const char* b;
    std::vector<int> degrees;
};

// Trinomials as printed; F4 uses c^2 = c + 1 and "-1" is read in the field.
const std::vector<Table2Entry>& table2_entries() {
    static const std::vector<Table2Entry> rows{
        {"x^11+x+1", "F2", "2", 11, 1, "1", "1", {2, 9}},
        {"x^11-x-1", "F5", "5", 11, 1, "-1", "-1", {1, 3, 7}},
        {"x^11+x^3+1", "F2", "2", 11, 3, "1", "1", {5, 6}},
        {"x^11+x^4+1", "F7", "7", 11, 4, "1", "1", {1, 1, 2, 7}},
        {"x^11+x^5+1", "F3", "3", 11, 5, "1", "1", {1, 3, 7}},
        {"x^11+x^5+1", "F2", "2", 11, 5, "1", "1", {3, 8}},
        {"x^23+x+1", "F2", "2", 23, 1, "1", "1", {2, 8, 13}},
        {"x^23+x+1", "F11", "11", 23, 1, "1", "1", {1, 2, 5, 15}},
        {"x^23+x^2+1", "F3", "3", 23, 2, "1", "1", {1, 2, 20}},
        {"x^23+x^2+1", "F7", "7", 23, 2, "1", "1", {7, 16}},
        {"x^23+x^3+1", "F5", "5", 23, 3, "1", "1", {1, 22}},
        {"x^23+x^4+1", "F19", "19", 23, 4, "1", "1", {1, 1, 1, 4, 7, 9}},
        {"x^23+x^5+1", "F3", "3", 23, 5, "1", "1", {1, 2, 5, 7, 8}},
        {"x^23+cx^5+1", "F4", "2^2", 23, 5, "c", "1", {1, 9, 13}},
        {"x^23+x^6+1", "F17", "17", 23, 6, "1", "1", {2, 3, 9, 9}},
        {"x^23+x^7+1", "F2", "2", 23, 7, "1", "1", {2, 10, 11}},
        {"x^23+x^8+1", "F3", "3", 23, 8, "1", "1", {1, 3, 19}},
        {"x^23+x^8+1", "F5", "5", 23, 8, "1", "1", {1, 4, 5, 13}},
        {"x^23+x^9+c", "F4", "2^2", 23, 9, "1", "c", {1, 2, 20}},
        {"x^23+x^9+1", "F7", "7", 23, 9, "1", "1", {4, 19}},
        {"x^23+x^10+1", "F13", "13", 23, 10, "1", "1", {1, 1, 4, 6, 11}},
        {"x^23+x^11+1", "F2", "2", 23, 11, "1", "1", {5, 6, 12}},
        {"x^23+x^11+1", "F3", "3", 23, 11, "1", "1", {1, 3, 19}},
    };
    return rows;
}

} // namespace

std::vector<Table2Row> reproduce_table2() {
    std::vector<Table2Row> out;
    for (const auto& e : table2_entries()) {
        const Field F = Field::parse(e.field_spec);
        std::vector<Elem> c(static_cast<std::size_t>(e.n) + 1, F.zero());
        c[0] = F.parse_element(e.b);
        c[e.m] = F.parse_element(e.a);
        c[e.n] = F.one();
        Table2Row row;
        row.polynomial = e.polynomial;
        row.field = e.field_label;
        row.expected = e.degrees;
        row.computed = factor_pattern(Poly(F, std::move(c))).degrees;
        row.match = row.expected == row.computed;
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<int> parse_type_label(std::string_view label) {
    std::string s;
    for (char ch : label) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') {
            throw Error(ErrorCode::ParseError, "unbalanced parentheses in '" + std::string(label) + "'");
        }
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    std::size_t i = 0;
    auto number = [&] {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw Error(ErrorCode::ParseError, "bad cycle-type label '" + std::string(label) + "'");
        }
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i++] - '0');
        }
        return v;
    };
    while (i < s.size()) {
        const int part = number();
        int times = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            times = number();
        }
        if (part > 1) {
            parts.insert(parts.end(), times, part);
        }
        if (i < s.size()) {
            if (s[i] != ',') {
                throw Error(ErrorCode::ParseError, "bad cycle-type label '" + std::string(label) + "'");
            }
            ++i;
        }
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

std::vector<std::pair<GroupName, std::vector<std::string>>> table1_rows() {
    using K = GroupName::Kind;
    // "2^2, 10^2" in the M24 row is printed without parentheses; it is one
    // type, (2^2,10^2).
    return {
        {GroupName::of(K::M11At11), {"2^4", "3^3", "4^2", "5^2", "(2,3,6)", "(2,8)", "11"}},
        {GroupName::of(K::M11At12), {"2^4", "3^3", "(2^2,4^2)", "5^2", "(2,3,6)", "(4,8)", "11"}},
        {GroupName::of(K::M12),
         {"2^6", "2^4", "3^3", "3^4", "(2^2,4^2)", "4^2", "5^2", "6^2", "(2,3,6)", "(4,8)", "(2,8)", "(2,10)", "11"}},
        {GroupName::of(K::M22), {"2^8", "3^6", "(2^2,4^4)", "5^4", "(2^2,3^2,6^2)", "7^3", "(2,4,8^2)", "11^2"}},
        {GroupName::of(K::AutM22),
         {"2^7", "2^8", "2^11", "(2,4^4)", "(2^3,4^4)", "3^6", "(2^2,4^4)", "5^4", "(2,3^2,6^2)", "(2^2,3^2,6^2)",
          "7^3", "(2,4,8^2)", "(4,8^2)", "(2,10^2)", "11^2", "(4,6,12)", "(7,14)"}},
        {GroupName::of(K::M23),
         {"2^8", "3^6", "(2^2,4^4)", "5^4", "(2^2,3^2,6^2)", "7^3", "(2,4,8^2)", "11^2", "(2,7,14)", "(3,5,15)", "23"}},
        {GroupName::of(K::M24),
         {"2^8", "2^12", "3^6", "3^8", "(2^4,4^4)", "(2^2,4^4)", "4^6", "5^4", "(2^2,3^2,6^2)", "6^4", "7^3",
          "(2,4,8^2)", "(2^2,10^2)", "11^2", "(2,4,6,12)", "12^2", "(2,7,14)", "(3,5,15)", "(2,21)", "23"}},
    };
}

Table1Row compare_table1_row(const GroupName& group, const std::vector<std::string>& expected) {
    Table1Row row;
    row.group = group;
    row.expected = expected;
    std::set<std::vector<int>> want;
    for (const auto& label : expected) {
        want.insert(parse_type_label(label));
    }
    std::set<std::vector<int>> have;
    for (const auto& t : cached_cycle_types(group)) {
        const auto moved = t.moved_parts();
        if (!moved.empty()) {
            have.insert(moved);
            row.computed.push_back(t.label());
        }
    }
    for (const auto& label : expected) {
        if (!have.count(parse_type_label(label))) {
            row.missing.push_back(label);
        }
    }
    for (const auto& t : cached_cycle_types(group)) {
        const auto moved = t.moved_parts();
        if (!moved.empty() && !want.count(moved)) {
            row.extra.push_back(t.label());
        }
    }
    row.match = row.missing.empty() && row.extra.empty() && want.size() == expected.size();
    return row;
}

std::vector<Table1Row> reproduce_table1() {
    std::vector<Table1Row> out;
    for (const auto& [g, expected] : table1_rows()) {
        out.push_back(compare_table1_row(g, expected));
    }
    return out;
}

} // namespace trigal
