#pragma once

#include "qes/boundary.hpp"
#include "qes/precision.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qes {

/// Fixed-point decimal string with exactly `decimals` digits after the
/// point, rounded half-even (the mpfr default nearest mode). Byte-stable:
/// the same value and digit count always produce the same string.
inline std::string format_fixed(const Real& x, int decimals) {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rf", decimals, x.backend().data());
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

/// Tabular document with csv / json / plot-data renderings. Cells are
/// preformatted strings so every format emits identical digits.
struct TableDocument {
    std::string schema;                 // e.g. "qes.table1/1"
    nlohmann::ordered_json config;      // run configuration echo
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;  // empty cell = missing
    std::vector<std::string> comments;  // plot-data header lines

    std::string to_csv() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << columns[i] << (i + 1 < columns.size() ? "," : "");
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < columns.size(); ++i) {
                if (i < row.size()) os << row[i];
                os << (i + 1 < columns.size() ? "," : "");
            }
            os << "\n";
        }
        return os.str();
    }

    std::string to_json() const {
        nlohmann::ordered_json doc;
        doc["schema"] = schema;
        doc["config"] = config;
        nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json obj;
            for (std::size_t i = 0; i < columns.size(); ++i) {
                if (i < row.size() && !row[i].empty()) obj[columns[i]] = row[i];
                else obj[columns[i]] = nullptr;
            }
            jrows.push_back(obj);
        }
        doc["rows"] = jrows;
        return doc.dump(2) + "\n";
    }

    std::string to_plot_data() const {
        std::ostringstream os;
        for (const auto& c : comments) os << "# " << c << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << row[i] << (i + 1 < row.size() ? " " : "");
            os << "\n";
        }
        return os.str();
    }

    std::string render(const std::string& format) const {
        if (format == "csv") return to_csv();
        if (format == "json") return to_json();
        if (format == "plot-data") return to_plot_data();
        throw std::invalid_argument("unknown output format: " + format);
    }
};

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output path: " + path);
    os << content;
    if (!os) throw std::invalid_argument("failed writing output: " + path);
}

/// Optional JSON cache for boundary results, keyed by (J, digits, method)
/// plus a method version stamp so stale entries never cross versions.
/// Purely an optimization: corrupt or missing caches are recomputed.
class BoundaryCache {
public:
    static constexpr const char* method_version = "1";

    explicit BoundaryCache(std::string path) : path_(std::move(path)) {
        if (path_.empty()) return;
        std::ifstream is(path_);
        if (!is) return;
        try {
            nlohmann::json doc = nlohmann::json::parse(is);
            if (doc.value("schema", "") == "qes.cache/1") data_ = doc;
        } catch (const nlohmann::json::exception&) {
            // unreadable cache: start fresh
        }
    }

    std::optional<CriticalBoundary> lookup(int J, unsigned digits, BoundaryMethod m) const {
        if (path_.empty() || !data_.contains("entries")) return std::nullopt;
        const auto key = make_key(J, digits, m);
        const auto& entries = data_.at("entries");
        if (!entries.contains(key)) return std::nullopt;
        const auto& e = entries.at(key);
        CriticalBoundary cb;
        cb.J = J;
        cb.method = m;
        cb.a_crit_sq = Real(e.at("a2").get<std::string>());
        cb.lo = Real(e.at("lo").get<std::string>());
        cb.hi = Real(e.at("hi").get<std::string>());
        cb.digits = e.at("digits").get<int>();
        return cb;
    }

    void store(const CriticalBoundary& cb, unsigned digits) {
        if (path_.empty()) return;
        data_["schema"] = "qes.cache/1";
        auto& e = data_["entries"][make_key(cb.J, digits, cb.method)];
        const int out_digits = cb.digits + 4;
        e["a2"] = cb.a_crit_sq.str(out_digits);
        e["lo"] = cb.lo.str(out_digits);
        e["hi"] = cb.hi.str(out_digits);
        e["digits"] = cb.digits;
        dirty_ = true;
    }

    void flush() {
        if (path_.empty() || !dirty_) return;
        write_text_file(path_, data_.dump(2) + "\n");
        dirty_ = false;
    }

private:
    static std::string make_key(int J, unsigned digits, BoundaryMethod m) {
        return "J=" + std::to_string(J) + ":digits=" + std::to_string(digits) +
               ":method=" + (m == BoundaryMethod::SturmBisection ? "sturm" : "discriminant") +
               ":v=" + method_version;
    }
    std::string path_;
    nlohmann::json data_;
    bool dirty_ = false;
};

} // namespace qes
