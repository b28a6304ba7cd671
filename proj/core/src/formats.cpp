#include "cforge/formats.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "cforge/errors.hpp"

namespace cforge::io {

using ordered_json = nlohmann::ordered_json;

namespace {

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

bool all_of_charset(const std::string& s, const char* set) {
    return !s.empty() && s.find_first_not_of(set) == std::string::npos;
}

ordered_json big_to_json(const BigInt& n) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
    return n.str();
}

BigInt big_from_json(const ordered_json& j, const char* what) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::runtime_error&) {
        }
    }
    throw format_error(std::string("bad integer for ") + what);
}

ordered_json entry_to_json(const QuadNum& e) {
    ordered_json j;
    j["a"] = ordered_json::array({big_to_json(e.a().num()), big_to_json(e.a().den())});
    j["b"] = ordered_json::array({big_to_json(e.b().num()), big_to_json(e.b().den())});
    return j;
}

QuadNum entry_from_json(const ordered_json& j, const BigInt& disc) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b")) {
        throw format_error("matrix entry must be {\"a\":[p,q],\"b\":[r,s]}");
    }
    const auto& a = j.at("a");
    const auto& b = j.at("b");
    if (!a.is_array() || a.size() != 2 || !b.is_array() || b.size() != 2) {
        throw format_error("matrix entry components must be [num, den] pairs");
    }
    Rational ra(big_from_json(a[0], "a numerator"), big_from_json(a[1], "a denominator"));
    Rational rb(big_from_json(b[0], "b numerator"), big_from_json(b[1], "b denominator"));
    return QuadNum(std::move(ra), std::move(rb), disc);
}

ordered_json parse_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw format_error("malformed JSON input");
    }
    return j;
}

ordered_json matrix_to_json(const ExactMatrix& m) {
    ordered_json j;
    j["order"] = m.order();
    j["disc"] = big_to_json(m.disc());
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.order(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t jx = 0; jx < m.order(); ++jx) row.push_back(entry_to_json(m(i, jx)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ExactMatrix matrix_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("disc") || !j.contains("entries")) {
        throw format_error("matrix JSON needs order, disc and entries");
    }
    const std::size_t n = j.at("order").get<std::size_t>();
    const BigInt disc = big_from_json(j.at("disc"), "disc");
    if (disc < 1) {
        throw format_error("disc must be a positive integer");
    }
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n) {
        throw format_error("entries must hold exactly 'order' rows");
    }
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw format_error("entries row " + std::to_string(i) + " has wrong length");
        }
        for (std::size_t c = 0; c < n; ++c) m(i, c) = entry_from_json(row[c], disc);
    }
    return m;
}

} // namespace

FileKind detect(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty()) {
        throw format_error("empty input");
    }
    const std::string& first = lines.front();
    if (first.rfind("sbibd", 0) == 0) return FileKind::incidence;
    if (first == "P2" || first.rfind("P2 ", 0) == 0) return FileKind::pgm;
    auto nonspace = first.find_first_not_of(" \t");
    if (nonspace != std::string::npos && first[nonspace] == '{') {
        ordered_json j = parse_json(text);
        return j.contains("cretan") ? FileKind::cretan_json : FileKind::matrix_json;
    }
    if (all_of_charset(first, "+-")) return FileKind::sign_grid;
    if (all_of_charset(first, "01")) return FileKind::incidence;
    throw format_error("unrecognized input format");
}

std::string write_incidence(const Design& d) {
    std::string out = "sbibd " + std::to_string(d.v()) + " " + std::to_string(d.k()) + " " +
                      std::to_string(d.lambda()) + "\n";
    for (std::size_t i = 0; i < d.v(); ++i) {
        for (std::size_t j = 0; j < d.v(); ++j) out += d.at(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Design read_incidence(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty()) {
        throw format_error("empty incidence input");
    }
    bool has_header = lines.front().rfind("sbibd", 0) == 0;
    std::size_t hv = 0, hk = 0, hl = 0;
    if (has_header) {
        std::istringstream hs(lines.front());
        std::string tag;
        if (!(hs >> tag >> hv >> hk >> hl)) {
            throw format_error("bad incidence header, expected 'sbibd v k lambda'");
        }
        lines.erase(lines.begin());
    }
    const std::size_t v = lines.size();
    std::vector<std::vector<int>> m(v);
    for (std::size_t i = 0; i < v; ++i) {
        if (lines[i].size() != v || !all_of_charset(lines[i], "01")) {
            throw format_error("incidence row " + std::to_string(i) +
                               " is not " + std::to_string(v) + " characters of {0,1}");
        }
        for (char ch : lines[i]) m[i].push_back(ch - '0');
    }
    Design d = verify_design(m);
    if (has_header && (d.v() != hv || d.k() != hk || d.lambda() != hl)) {
        throw verify_error("incidence header (" + std::to_string(hv) + "," + std::to_string(hk) +
                           "," + std::to_string(hl) + ") disagrees with the matrix (" +
                           std::to_string(d.v()) + "," + std::to_string(d.k()) + "," +
                           std::to_string(d.lambda()) + ")");
    }
    return d;
}

std::string write_sign_grid(const HadamardMatrix& h) { return write_sign_grid(h.rows()); }

std::string write_sign_grid(const std::vector<std::vector<int>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (int e : row) out += e > 0 ? '+' : '-';
        out += '\n';
    }
    return out;
}

std::vector<std::vector<int>> read_sign_grid(const std::string& text) {
    auto lines = nonempty_lines(text);
    if (lines.empty()) {
        throw format_error("empty sign grid");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& line : lines) {
        if (!all_of_charset(line, "+-")) {
            throw format_error("sign grid rows must use only '+' and '-'");
        }
        std::vector<int> row;
        for (char ch : line) row.push_back(ch == '+' ? 1 : -1);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string write_matrix_json(const ExactMatrix& m) { return matrix_to_json(m).dump() + "\n"; }

ExactMatrix read_matrix_json(const std::string& text) { return matrix_from_json(parse_json(text)); }

std::string write_cretan_json(const CretanMatrix& s) {
    ordered_json j = matrix_to_json(s.matrix());
    ordered_json meta;
    meta["v"] = s.source_params().v;
    meta["k"] = s.source_params().k;
    meta["lambda"] = s.source_params().lambda;
    meta["convention"] = to_string(s.convention());
    meta["y"] = s.y().str();
    meta["omega"] = s.omega().str();
    j["cretan"] = std::move(meta);
    return j.dump() + "\n";
}

CretanMatrix read_cretan_json(const std::string& text) {
    ordered_json j = parse_json(text);
    if (!j.contains("cretan")) {
        throw format_error("missing cretan metadata block");
    }
    ExactMatrix m = matrix_from_json(j);
    const auto& meta = j.at("cretan");
    for (const char* key : {"v", "k", "lambda", "convention", "y", "omega"}) {
        if (!meta.contains(key)) {
            throw format_error(std::string("cretan metadata is missing '") + key + "'");
        }
    }
    DesignParams source{meta.at("v").get<std::size_t>(), meta.at("k").get<std::size_t>(),
                        meta.at("lambda").get<std::size_t>()};
    const LevelConvention conv = convention_from_string(meta.at("convention").get<std::string>());
    const QuadNum y = QuadNum::parse(meta.at("y").get<std::string>());

    const QuadNum one(1);
    const std::size_t n = m.order();
    std::vector<std::vector<int>> mask(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < n; ++c) {
            const QuadNum& e = m(i, c);
            if (e == one) {
                mask[i][c] = 1;
            } else if (e == y) {
                mask[i][c] = 0;
            } else {
                throw verify_error("entry (" + std::to_string(i) + "," + std::to_string(c) +
                                   ") = " + e.str() + " is neither 1 nor the stored level " +
                                   y.str());
            }
        }
    }

    TwoLevelPattern pattern{verify_design(mask)};
    const DesignParams expected =
        conv == LevelConvention::x_on_ones
            ? source
            : DesignParams{source.v, source.v - source.k, source.v - 2 * source.k + source.lambda};
    if (pattern.mask().params() != expected) {
        throw verify_error("stored source parameters disagree with the mask");
    }
    CretanMatrix s = make_cretan(std::move(pattern), y, source, conv);
    const QuadNum stored_omega = QuadNum::parse(meta.at("omega").get<std::string>());
    if (stored_omega != s.omega()) {
        throw verify_error("stored weight " + stored_omega.str() + " disagrees with the computed " +
                           s.omega().str());
    }
    return s;
}

ExactMatrix read_any_matrix(const std::string& text) {
    switch (detect(text)) {
    case FileKind::incidence:
        return read_incidence(text).incidence();
    case FileKind::sign_grid: {
        auto rows = read_sign_grid(text);
        const std::size_t n = rows.size();
        ExactMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (rows[i].size() != n) {
                throw format_error("sign grid is not square");
            }
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    case FileKind::matrix_json:
        return read_matrix_json(text);
    case FileKind::cretan_json:
        return read_cretan_json(text).matrix();
    case FileKind::pgm:
        throw format_error("PGM portraits are output-only");
    }
    throw format_error("unrecognized input format");
}

std::string render_pgm(const ExactMatrix& m, unsigned scale) {
    if (scale == 0) {
        throw format_error("render scale must be >= 1");
    }
    const std::size_t n = m.order();
    const std::size_t side = n * scale;

    std::vector<int> gray(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double value = m(i, j).to_double();
            long long g = std::llround(255.0 * (value + 1.0) / 2.0); // half away from zero
            gray[i * n + j] = static_cast<int>(std::clamp(g, 0LL, 255LL));
        }
    }

    std::string out = "P2\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
    std::string line;
    auto flush_line = [&]() {
        if (!line.empty()) {
            out += line;
            out += '\n';
            line.clear();
        }
    };
    for (std::size_t pi = 0; pi < side; ++pi) {
        for (std::size_t pj = 0; pj < side; ++pj) {
            const std::string tok = std::to_string(gray[(pi / scale) * n + (pj / scale)]);
            // Plain PGM keeps lines at 70 characters or fewer.
            if (!line.empty() && line.size() + 1 + tok.size() > 70) flush_line();
            if (!line.empty()) line += ' ';
            line += tok;
        }
        flush_line();
    }
    return out;
}

} // namespace cforge::io
