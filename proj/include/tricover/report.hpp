#ifndef TRICOVER_REPORT_HPP
#define TRICOVER_REPORT_HPP

// Deterministic JSON emitter for CLI reports. Keys keep insertion order and
// doubles print with %.17g, so identical runs produce byte-identical output.

#include <complex>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tricover {

class Report {
public:
    enum class Kind { Null, Bool, Int, Double, String, Array, Object };

    Report() : kind_(Kind::Object) {}

    static Report null() { Report r; r.kind_ = Kind::Null; return r; }
    static Report boolean(bool b) { Report r; r.kind_ = Kind::Bool; r.bool_ = b; return r; }
    static Report integer(long long v) { Report r; r.kind_ = Kind::Int; r.int_ = v; return r; }
    static Report number(double v) { Report r; r.kind_ = Kind::Double; r.dbl_ = v; return r; }
    static Report string(std::string s) { Report r; r.kind_ = Kind::String; r.str_ = std::move(s); return r; }
    static Report array() { Report r; r.kind_ = Kind::Array; return r; }
    static Report object() { Report r; r.kind_ = Kind::Object; return r; }

    static Report complex_number(std::complex<double> z) {
        Report r = array();
        r.push(number(z.real()));
        r.push(number(z.imag()));
        return r;
    }

    template <class M>
    static Report complex_matrix(const M& m) {
        Report rows = array();
        for (int i = 0; i < m.rows(); ++i) {
            Report row = array();
            for (int j = 0; j < m.cols(); ++j) row.push(complex_number(m(i, j)));
            rows.push(std::move(row));
        }
        return rows;
    }

    void push(Report v) { items_.push_back({std::string(), std::move(v)}); }
    void set(const std::string& key, Report v) { items_.push_back({key, std::move(v)}); }
    void set(const std::string& key, double v) { set(key, number(v)); }
    void set(const std::string& key, long long v) { set(key, integer(v)); }
    void set(const std::string& key, int v) { set(key, integer(v)); }
    void set(const std::string& key, bool v) { set(key, boolean(v)); }
    void set(const std::string& key, const char* v) { set(key, string(v)); }
    void set(const std::string& key, const std::string& v) { set(key, string(v)); }
    void set(const std::string& key, std::complex<double> v) { set(key, complex_number(v)); }

    std::string to_string(int indent = 0) const {
        std::string out;
        write(out, indent);
        out.push_back('\n');
        return out;
    }

private:
    Kind kind_ = Kind::Null;
    bool bool_ = false;
    long long int_ = 0;
    double dbl_ = 0;
    std::string str_;
    std::vector<std::pair<std::string, Report>> items_;

    static std::string fmt_double(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static void escape(std::string& out, const std::string& s) {
        out.push_back('"');
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default: out.push_back(c);
            }
        }
        out.push_back('"');
    }
    void write(std::string& out, int depth) const {
        const std::string pad(2 * static_cast<std::size_t>(depth), ' ');
        const std::string pad1(2 * static_cast<std::size_t>(depth + 1), ' ');
        switch (kind_) {
            case Kind::Null: out += "null"; break;
            case Kind::Bool: out += bool_ ? "true" : "false"; break;
            case Kind::Int: out += std::to_string(int_); break;
            case Kind::Double: out += fmt_double(dbl_); break;
            case Kind::String: escape(out, str_); break;
            case Kind::Array: {
                bool flat = true;
                for (const auto& it : items_)
                    if (it.second.kind_ == Kind::Array || it.second.kind_ == Kind::Object) flat = false;
                out.push_back('[');
                for (std::size_t i = 0; i < items_.size(); ++i) {
                    if (!flat) { out.push_back('\n'); out += pad1; }
                    items_[i].second.write(out, depth + 1);
                    if (i + 1 < items_.size()) out += flat ? ", " : ",";
                }
                if (!flat && !items_.empty()) { out.push_back('\n'); out += pad; }
                out.push_back(']');
                break;
            }
            case Kind::Object: {
                out.push_back('{');
                for (std::size_t i = 0; i < items_.size(); ++i) {
                    out.push_back('\n');
                    out += pad1;
                    escape(out, items_[i].first);
                    out += ": ";
                    items_[i].second.write(out, depth + 1);
                    if (i + 1 < items_.size()) out.push_back(',');
                }
                if (!items_.empty()) { out.push_back('\n'); out += pad; }
                out.push_back('}');
                break;
            }
        }
    }
};

} // namespace tricover

#endif
