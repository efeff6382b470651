#include "sfh/shd.hpp"
#include "sfh/error.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace sfh {

namespace {

constexpr std::string_view kPartial = "\xE2\x88\x82"; // ∂

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class LineScanner {
public:
    LineScanner(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

    [[noreturn]] void fail(const std::string& msg, ErrorCode code = ErrorCode::ParseError) const {
        throw ParseError(code, line_no_, column(), msg);
    }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg, ErrorCode code) const {
        throw ParseError(code, line_no_, column_of(pos), msg);
    }

    void skip_ws() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= line_.size();
    }
    std::size_t pos() const { return pos_; }

    bool accept(std::string_view s) {
        skip_ws();
        if (line_.substr(pos_, s.size()) != s) return false;
        pos_ += s.size();
        return true;
    }
    void expect(std::string_view s) {
        if (!accept(s)) fail("expected '" + std::string(s) + "'" + found());
    }

    std::string ident(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < line_.size() && ident_char(line_[pos_])) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what + found());
        return std::string(line_.substr(start, pos_ - start));
    }

    std::size_t number(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) ++pos_;
        if (start == pos_) fail(std::string("expected ") + what + found());
        if (pos_ - start > 9) fail_at(start, std::string(what) + " is too large", ErrorCode::ParseError);
        return static_cast<std::size_t>(std::stoul(std::string(line_.substr(start, pos_ - start))));
    }

    std::string found() {
        skip_ws();
        if (pos_ >= line_.size()) return ", found end of line";
        std::size_t end = pos_ + 1;
        while (end < line_.size() && (static_cast<unsigned char>(line_[end]) & 0xC0) == 0x80) ++end;
        return ", found '" + std::string(line_.substr(pos_, end - pos_)) + "'";
    }

private:
    std::size_t column_of(std::size_t pos) const {
        std::size_t col = 1;
        for (std::size_t i = 0; i < pos && i < line_.size(); ++i)
            if ((static_cast<unsigned char>(line_[i]) & 0xC0) != 0x80) ++col;
        return col;
    }
    std::size_t column() const { return column_of(pos_); }

    std::string_view line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    Diagram parse(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(start, end - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            const std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
            ++line_no;
            parse_line(LineScanner(line, line_no));
            start = end + 1;
        }
        if (!content_) throw ParseError(ErrorCode::ParseError, line_no, 1, "no surface content");
        return std::move(d_);
    }

private:
    void parse_line(LineScanner s) {
        if (s.at_end()) return;
        const std::size_t kw_pos = s.pos();
        const std::string kw = s.ident("a declaration");
        content_ = true;
        if (kw == "points") {
            while (!s.at_end()) declare(s, points_, d_.points, "point");
        } else if (kw == "boundary") {
            while (!s.at_end()) declare(s, circles_, d_.boundary_circles, "boundary circle");
        } else if (kw == "alpha" || kw == "beta") {
            curve(s, kw == "alpha" ? CurveKind::Alpha : CurveKind::Beta);
        } else if (kw == "region") {
            region(s);
        } else {
            s.fail_at(kw_pos, "unknown declaration '" + kw + "'", ErrorCode::ParseError);
        }
    }

    static void declare(LineScanner& s, std::map<std::string, std::size_t>& table, std::vector<std::string>& list,
                        const char* what) {
        const std::size_t at = s.pos();
        std::string id = s.ident(what);
        check_fresh(s, at, table, id, what);
        table[id] = list.size();
        list.push_back(id);
    }

    static void check_fresh(LineScanner& s, std::size_t at, const std::map<std::string, std::size_t>& table,
                            const std::string& id, const char* what) {
        if (table.count(id))
            s.fail_at(at, std::string(what) + " '" + id + "' declared twice", ErrorCode::DuplicateIdentifier);
    }

    static std::size_t lookup(LineScanner& s, std::size_t at, const std::map<std::string, std::size_t>& table,
                              const std::string& id, const char* what) {
        auto it = table.find(id);
        if (it == table.end())
            s.fail_at(at, std::string("undeclared ") + what + " '" + id + "'", ErrorCode::UndeclaredIdentifier);
        return it->second;
    }

    void curve(LineScanner& s, CurveKind kind) {
        s.skip_ws();
        const std::size_t at = s.pos();
        Curve c;
        c.id = s.ident("a curve name");
        check_fresh(s, at, curves_, c.id, "curve");
        s.expect(":");
        while (!s.at_end()) {
            s.skip_ws();
            const std::size_t pat = s.pos();
            std::string p = s.ident("a point");
            c.points.push_back(lookup(s, pat, points_, p, "point"));
        }
        auto& list = d_.curves(kind);
        curves_[c.id] = list.size();
        curve_kind_[c.id] = kind;
        list.push_back(std::move(c));
    }

    Segment segment(LineScanner& s) {
        s.skip_ws();
        const std::size_t at = s.pos();
        if (s.accept(kPartial) || s.accept("@")) {
            std::string id = s.ident("a boundary circle");
            return Segment::boundary(lookup(s, at, circles_, id, "boundary circle"));
        }
        bool forward;
        if (s.accept("+"))
            forward = true;
        else if (s.accept("-"))
            forward = false;
        else
            s.fail("expected a signed arc or boundary circle" + s.found());
        s.skip_ws();
        const std::size_t cat = s.pos();
        std::string id = s.ident("a curve name");
        const std::size_t idx = lookup(s, cat, curves_, id, "curve");
        const CurveKind kind = curve_kind_.at(id);
        s.expect(".");
        s.skip_ws();
        const std::size_t nat = s.pos();
        const std::size_t arc = s.number("an arc index");
        if (arc >= d_.curves(kind)[idx].arc_count())
            s.fail_at(nat, "curve '" + id + "' has no arc " + std::to_string(arc), ErrorCode::UndeclaredIdentifier);
        return Segment::along(kind, idx, arc, forward);
    }

    void region(LineScanner& s) {
        s.skip_ws();
        const std::size_t at = s.pos();
        Region r;
        r.id = s.ident("a region name");
        check_fresh(s, at, regions_, r.id, "region");
        s.expect("genus");
        r.genus = static_cast<unsigned>(s.number("a genus"));
        s.expect(":");
        while (!s.at_end()) {
            if (s.accept("cycle")) {
                s.expect("(");
                BoundaryCycle cyc;
                while (!s.accept(")")) {
                    if (s.at_end()) s.fail("unterminated cycle");
                    cyc.push_back(segment(s));
                }
                if (cyc.empty()) s.fail("empty cycle");
                r.cycles.push_back(std::move(cyc));
            } else if (s.accept("corners")) {
                s.expect("(");
                while (!s.accept(")")) {
                    if (s.at_end()) s.fail("unterminated corners clause");
                    s.skip_ws();
                    const std::size_t pat = s.pos();
                    Corner c;
                    c.point = lookup(s, pat, points_, s.ident("a point"), "point");
                    s.expect(":");
                    c.quadrant.alpha_out = sign(s);
                    c.quadrant.beta_out = sign(s);
                    r.declared_corners.push_back(c);
                }
            } else {
                s.fail("expected 'cycle' or 'corners'" + s.found());
            }
        }
        if (r.cycles.empty()) s.fail("region '" + r.id + "' has no boundary cycle");
        regions_[r.id] = d_.regions.size();
        d_.regions.push_back(std::move(r));
    }

    static bool sign(LineScanner& s) {
        if (s.accept("+")) return true;
        if (s.accept("-")) return false;
        s.fail("expected '+' or '-'" + s.found());
    }

    Diagram d_;
    bool content_ = false;
    std::map<std::string, std::size_t> points_, circles_, curves_, regions_;
    std::map<std::string, CurveKind> curve_kind_;
};

void emit_ids(std::ostringstream& out, const char* kw, const std::vector<std::string>& ids) {
    if (ids.empty()) return;
    out << kw;
    for (const std::string& id : ids) out << ' ' << id;
    out << '\n';
}

} // namespace

Diagram parse_shd(std::string_view text) { return Parser().parse(text); }

std::string emit_shd(const Diagram& d) {
    std::ostringstream out;
    emit_ids(out, "points", d.points);
    emit_ids(out, "boundary", d.boundary_circles);
    for (CurveKind k : {CurveKind::Alpha, CurveKind::Beta})
        for (const Curve& c : d.curves(k)) {
            out << to_string(k) << ' ' << c.id << ':';
            for (std::size_t p : c.points) out << ' ' << d.points[p];
            out << '\n';
        }
    for (const Region& r : d.regions) {
        out << "region " << r.id << " genus " << r.genus << ':';
        for (const BoundaryCycle& cyc : r.cycles) {
            out << " cycle(";
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const Segment& s = cyc[i];
                if (i) out << ' ';
                if (s.kind == Segment::Kind::BoundaryCircle)
                    out << kPartial << d.boundary_circles[s.circle];
                else
                    out << (s.forward ? '+' : '-') << d.curves(s.arc.kind)[s.arc.curve].id << '.' << s.arc.arc;
            }
            out << ')';
        }
        if (!r.declared_corners.empty()) {
            out << " corners(";
            for (std::size_t i = 0; i < r.declared_corners.size(); ++i) {
                const Corner& c = r.declared_corners[i];
                if (i) out << ' ';
                out << d.points[c.point] << ':' << (c.quadrant.alpha_out ? '+' : '-')
                    << (c.quadrant.beta_out ? '+' : '-');
            }
            out << ')';
        }
        out << '\n';
    }
    return out.str();
}

Diagram read_shd_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_shd(buf.str());
}

void write_shd_file(const std::string& path, const Diagram& d) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
    out << emit_shd(d);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
}

} // namespace sfh
