#include "dea/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace dea::io {

namespace {

using Rows = std::vector<std::vector<std::string>>;

// RFC-4180-ish CSV: comma separated, double quotes with "" escapes, \r\n or
// \n line ends. Blank lines are ignored.
Rows parse_csv(std::string_view text) {
    Rows rows;
    std::vector<std::string> cur;
    std::string field;
    bool in_quotes = false;
    bool row_has_content = false;

    auto end_field = [&] {
        cur.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        end_field();
        if (cur.size() > 1 || row_has_content || !cur[0].empty()) {
            rows.push_back(std::move(cur));
        }
        cur.clear();
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
        case '"':
            in_quotes = true;
            row_has_content = true;
            break;
        case ',':
            end_field();
            row_has_content = true;
            break;
        case '\n':
            end_row();
            break;
        case '\r':
            break;
        default:
            field.push_back(c);
            row_has_content = true;
        }
    }
    if (in_quotes) {
        throw ValidationError("unterminated quoted CSV field");
    }
    if (row_has_content || !field.empty() || !cur.empty()) {
        end_row();
    }
    return rows;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) {
        ++b;
    }
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

double parse_cell(const std::string& raw, const std::string& where) {
    std::string digits;
    digits.reserve(raw.size());
    for (char c : raw) {
        if (c == ',') {
            continue; // thousands separator
        }
        if (c != ' ' && c != '\t') {
            digits.push_back(c);
        }
    }
    double v = 0.0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || digits.empty()) {
        throw ValidationError(where + ": cannot parse numeric cell '" + raw + "'");
    }
    if (!std::isfinite(v) || v <= 0.0) {
        throw ValidationError(where + ": value " + raw + " must be finite and > 0");
    }
    return v;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out += "\"";
    return out;
}

} // namespace

std::string format_full(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_sci3(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    std::string s(buf);
    const std::size_t epos = s.find('e');
    std::string mant = s.substr(0, epos);
    std::string exp = s.substr(epos + 1);
    const bool neg_exp = !exp.empty() && exp[0] == '-';
    if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
        exp.erase(0, 1);
    }
    while (exp.size() > 1 && exp[0] == '0') {
        exp.erase(0, 1);
    }
    return mant + "e" + (neg_exp ? "-" : "") + exp;
}

std::string format_score(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return std::string(buf);
}

ReportFormat parse_report_format(std::string_view name) {
    if (name == "text") {
        return ReportFormat::text;
    }
    if (name == "csv") {
        return ReportFormat::csv;
    }
    if (name == "json") {
        return ReportFormat::json;
    }
    throw ValidationError("unknown report format '" + std::string(name) +
                          "' (expected text, csv or json)");
}

Dataset parse_panel(std::string_view text) {
    const Rows rows = parse_csv(text);
    if (rows.empty()) {
        throw ValidationError("panel file is empty");
    }
    const std::vector<std::string>& header = rows[0];
    if (header.size() < 2 || trim(header[0]) != "id" || trim(header[1]) != "name") {
        throw ValidationError("panel header must start with 'id,name'");
    }
    std::vector<std::size_t> in_cols, out_cols;
    std::vector<std::string> in_labels, out_labels;
    for (std::size_t c = 2; c < header.size(); ++c) {
        const std::string h = trim(header[c]);
        if (h.rfind("in:", 0) == 0) {
            in_cols.push_back(c);
            in_labels.push_back(h.substr(3));
        } else if (h.rfind("out:", 0) == 0) {
            out_cols.push_back(c);
            out_labels.push_back(h.substr(4));
        } else {
            throw ValidationError("panel column '" + h +
                                  "' must be prefixed with 'in:' or 'out:'");
        }
    }
    if (in_cols.empty() || out_cols.empty()) {
        throw ValidationError("panel needs at least one 'in:' and one 'out:' column");
    }

    const std::size_t n = rows.size() - 1;
    if (n == 0) {
        throw ValidationError("panel has a header but no DMU rows");
    }
    Dataset d;
    d.input_labels = in_labels;
    d.output_labels = out_labels;
    d.inputs = Matrix(n, in_cols.size());
    d.outputs = Matrix(n, out_cols.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<std::string>& row = rows[i + 1];
        if (row.size() != header.size()) {
            throw ValidationError("row " + std::to_string(i + 2) + " has " +
                                  std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(header.size()));
        }
        d.ids.push_back(trim(row[0]));
        d.names.push_back(trim(row[1]));
        for (std::size_t k = 0; k < in_cols.size(); ++k) {
            const std::string where =
                "row " + std::to_string(i + 2) + ", column in:" + in_labels[k];
            d.inputs(i, k) = parse_cell(row[in_cols[k]], where);
        }
        for (std::size_t r = 0; r < out_cols.size(); ++r) {
            const std::string where =
                "row " + std::to_string(i + 2) + ", column out:" + out_labels[r];
            d.outputs(i, r) = parse_cell(row[out_cols[r]], where);
        }
    }
    validate_dataset(d);
    return d;
}

std::string render_panel(const Dataset& d) {
    std::string out = "id,name";
    for (const std::string& l : d.input_labels) {
        out += "," + csv_escape("in:" + l);
    }
    for (const std::string& l : d.output_labels) {
        out += "," + csv_escape("out:" + l);
    }
    out += "\n";
    for (std::size_t i = 0; i < d.dmu_count(); ++i) {
        out += csv_escape(d.ids[i]) + "," + csv_escape(d.names[i]);
        for (std::size_t k = 0; k < d.input_count(); ++k) {
            out += "," + format_full(d.inputs(i, k));
        }
        for (std::size_t r = 0; r < d.output_count(); ++r) {
            out += "," + format_full(d.outputs(i, r));
        }
        out += "\n";
    }
    return out;
}

namespace {

// 21 Japanese commercial banks, fiscal year 2016. Inputs: interest and
// non-interest expenses; outputs: interest and non-interest income
// (unit: million yen).
constexpr std::string_view kBankPanelCsv =
    "id,name,in:interest expenses,in:non-interest expenses,"
    "out:interest income,out:non-interest income\n"
    "1,Mizuho Financial Group,\"577,737\",\"1,977,650\",\"1,445,555\",\"1,847,345\"\n"
    "2,Sumitomo Mitsui Banking Corporation,\"553,394\",\"3,573,995\",\"1,912,027\",\"3,221,218\"\n"
    "3,Mitsubishi UFJ Financial Group,\"863,677\",\"3,755,124\",\"2,888,134\",\"3,091,434\"\n"
    "4,Resona Bank,\"28,422\",\"505,224\",\"406,328\",\"355,529\"\n"
    "5,Aozora Bank,\"21,507\",\"61,432\",\"67,154\",\"67,550\"\n"
    "6,Shinsei Bank,\"16,209\",\"167,957\",\"138,488\",\"122,587\"\n"
    "7,Japan Post Bank Co,\"348,746\",\"1,107,938\",\"1,567,512\",\"329,769\"\n"
    "8,The Chiba Bank,\"16,589\",\"133,618\",\"135,533\",\"92,278\"\n"
    "9,The Bank of Yokohama,\"10,953\",\"222,692\",\"183,217\",\"206,953\"\n"
    "10,The Shizuoka Bank,\"14,661\",\"188,335\",\"123,005\",\"126,799\"\n"
    "11,The Bank of Fukuoka,\"15,988\",\"97,002\",\"123,899\",\"48,873\"\n"
    "12,Hokuhoku Financial Group,\"6,243\",\"141,699\",\"120,786\",\"66,634\"\n"
    "13,Hokuyo Bank (North Pacific Bank),\"3,471\",\"123,104\",\"78,229\",\"69,743\"\n"
    "14,Aichi Bank,\"1,282\",\"41,188\",\"31,015\",\"19,016\"\n"
    "15,Miyazaki Bank,\"2,014\",\"35,993\",\"34,558\",\"19,371\"\n"
    "16,Ehime Bank,\"2,861\",\"31,728\",\"33,120\",\"8,943\"\n"
    "17,Bank of Kyoto,\"5,082\",\"77,697\",\"70,725\",\"39,755\"\n"
    "18,Hiroshima Bank,\"9,417\",\"83,760\",\"80,579\",\"57,684\"\n"
    "19,Tottori Bank,\"996\",\"13,246\",\"12,112\",\"4,080\"\n"
    "20,Akita Bank,\"2,709\",\"38,369\",\"31,235\",\"16,230\"\n"
    "21,The Bank of Iwate,\"1,486\",\"36,986\",\"31,863\",\"19,268\"\n";

// C: city bank, R: regional bank, O: other.
constexpr const char* kBankTypes[21] = {
    "C", "C", "C", "C", "O", "O", "O", "R", "R", "R", "R",
    "R", "R", "R", "R", "R", "R", "R", "R", "R", "R",
};

} // namespace

std::string_view bank_fixture_csv() {
    return kBankPanelCsv;
}

Dataset bank_fixture() {
    static const Dataset cached = [] {
        Dataset d = parse_panel(kBankPanelCsv);
        d.tags.assign(std::begin(kBankTypes), std::end(kBankTypes));
        return d;
    }();
    return cached;
}

Report make_report(const Dataset& d, const analysis::FullReport& full) {
    Report r;
    r.input_labels = d.input_labels;
    r.output_labels = d.output_labels;
    r.rows.reserve(full.entries.size());
    for (std::size_t i = 0; i < full.entries.size(); ++i) {
        const analysis::DmuAnalysis& e = full.entries[i];
        ReportRow row;
        row.id = d.ids.empty() ? std::to_string(i + 1) : d.ids[i];
        row.name = e.name;
        row.tag = d.tags.empty() ? "" : d.tags[i];
        if (!e.error.empty()) {
            row.error = e.error;
        } else {
            row.theta = e.ccr->theta_star;
            row.u = e.ccr->u;
            row.v = e.ccr->v;
            row.t_star = e.super->t_star;
            row.u_scaled = e.super->u_scaled;
            row.cls = std::string(analysis::to_string(e.cls->cell));
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

namespace {

std::string render_text(const Report& r) {
    std::string out;
    const std::size_t l = r.input_labels.size();
    const std::size_t m = r.output_labels.size();
    const bool have_tags =
        std::any_of(r.rows.begin(), r.rows.end(), [](const ReportRow& w) { return !w.tag.empty(); });
    if (!r.rows.empty()) {
        for (std::size_t k = 0; k < l; ++k) {
            out += (k == 0 ? "inputs : " : "          ");
            out += "u" + std::to_string(k + 1) + " = " + r.input_labels[k] + "\n";
        }
        for (std::size_t k = 0; k < m; ++k) {
            out += (k == 0 ? "outputs: " : "          ");
            out += "v" + std::to_string(k + 1) + " = " + r.output_labels[k] + "\n";
        }
        out += "\n";
    }

    std::vector<std::string> headers = {"No.", "Name"};
    if (have_tags) {
        headers.push_back("Type");
    }
    headers.push_back("CCR-Eff");
    for (std::size_t k = 0; k < l; ++k) {
        headers.push_back("u" + std::to_string(k + 1));
    }
    for (std::size_t k = 0; k < m; ++k) {
        headers.push_back("v" + std::to_string(k + 1));
    }
    headers.push_back("t*");
    headers.push_back("Class");

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> notes;
    for (const ReportRow& row : r.rows) {
        std::vector<std::string> c = {row.id, row.name};
        if (have_tags) {
            c.push_back(row.tag);
        }
        if (!row.error.empty()) {
            c.push_back("-");
            for (std::size_t k = 0; k < l + m; ++k) {
                c.push_back("-");
            }
            c.push_back("-");
            c.push_back("-");
            notes.push_back(row.error);
        } else {
            c.push_back(format_score(row.theta));
            for (double w : row.u) {
                c.push_back(format_sci3(w));
            }
            for (double w : row.v) {
                c.push_back(format_sci3(w));
            }
            c.push_back(format_score(row.t_star));
            c.push_back(row.cls);
            notes.emplace_back();
        }
        cells.push_back(std::move(c));
    }

    std::vector<std::size_t> width(headers.size());
    for (std::size_t j = 0; j < headers.size(); ++j) {
        width[j] = headers[j].size();
        for (const auto& row : cells) {
            width[j] = std::max(width[j], row[j].size());
        }
    }
    auto emit_row = [&](const std::vector<std::string>& row) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            const bool right = (j == 0);
            std::string cell = row[j];
            if (j + 1 < row.size()) {
                if (right) {
                    cell.insert(0, width[j] - cell.size(), ' ');
                } else {
                    cell.append(width[j] - cell.size(), ' ');
                }
            }
            out += cell;
            if (j + 1 < row.size()) {
                out += "  ";
            }
        }
        out += "\n";
    };
    emit_row(headers);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        emit_row(cells[i]);
        if (!notes[i].empty()) {
            out += "     ! " + notes[i] + "\n";
        }
    }
    return out;
}

std::string render_csv(const Report& r) {
    std::string out = "id,name,tag,theta";
    for (const std::string& lab : r.input_labels) {
        out += "," + csv_escape("u:" + lab);
    }
    for (const std::string& lab : r.output_labels) {
        out += "," + csv_escape("v:" + lab);
    }
    out += ",t_star";
    for (const std::string& lab : r.input_labels) {
        out += "," + csv_escape("u_scaled:" + lab);
    }
    out += ",class,error\n";
    for (const ReportRow& row : r.rows) {
        out += csv_escape(row.id) + "," + csv_escape(row.name) + "," + csv_escape(row.tag);
        if (!row.error.empty()) {
            // theta + u + v + t_star + u_scaled + class stay empty
            const std::size_t blanks = 2 * r.input_labels.size() + r.output_labels.size() + 3;
            out.append(blanks, ',');
            out += "," + csv_escape(row.error) + "\n";
            continue;
        }
        out += "," + format_full(row.theta);
        for (double w : row.u) {
            out += "," + format_full(w);
        }
        for (double w : row.v) {
            out += "," + format_full(w);
        }
        out += "," + format_full(row.t_star);
        for (double w : row.u_scaled) {
            out += "," + format_full(w);
        }
        out += "," + csv_escape(row.cls) + ",\n";
    }
    return out;
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json dmus = nlohmann::ordered_json::array();
    for (const ReportRow& row : r.rows) {
        nlohmann::ordered_json j;
        j["name"] = row.name;
        if (!row.error.empty()) {
            j["error"] = row.error;
        } else {
            j["theta"] = row.theta;
            j["u"] = row.u;
            j["v"] = row.v;
            j["t_star"] = row.t_star;
            j["u_scaled"] = row.u_scaled;
            j["class"] = row.cls;
        }
        dmus.push_back(std::move(j));
    }
    nlohmann::ordered_json top;
    top["dmus"] = std::move(dmus);
    return top.dump(2) + "\n";
}

} // namespace

std::string render_report(const Report& r, ReportFormat format) {
    switch (format) {
    case ReportFormat::text:
        return render_text(r);
    case ReportFormat::csv:
        return render_csv(r);
    case ReportFormat::json:
        return render_json(r);
    }
    throw ValidationError("unknown report format");
}

Report parse_report_csv(std::string_view text) {
    const Rows rows = parse_csv(text);
    if (rows.empty()) {
        throw ValidationError("report CSV is empty");
    }
    const std::vector<std::string>& h = rows[0];
    Report r;
    std::size_t c = 0;
    auto expect = [&](std::string_view want) {
        if (c >= h.size() || h[c] != want) {
            throw ValidationError("report CSV header: expected '" + std::string(want) + "'");
        }
        ++c;
    };
    expect("id");
    expect("name");
    expect("tag");
    expect("theta");
    while (c < h.size() && h[c].rfind("u:", 0) == 0) {
        r.input_labels.push_back(h[c].substr(2));
        ++c;
    }
    while (c < h.size() && h[c].rfind("v:", 0) == 0) {
        r.output_labels.push_back(h[c].substr(2));
        ++c;
    }
    expect("t_star");
    for (std::size_t k = 0; k < r.input_labels.size(); ++k) {
        ++c; // u_scaled:<label>
    }
    expect("class");
    expect("error");

    auto num = [](const std::string& s) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw ValidationError("report CSV: bad number '" + s + "'");
        }
        return v;
    };
    const std::size_t l = r.input_labels.size(), m = r.output_labels.size();
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const std::vector<std::string>& row = rows[i];
        if (row.size() != h.size()) {
            throw ValidationError("report CSV row " + std::to_string(i + 1) + " is ragged");
        }
        ReportRow out;
        out.id = row[0];
        out.name = row[1];
        out.tag = row[2];
        out.error = row.back();
        if (out.error.empty()) {
            std::size_t j = 3;
            out.theta = num(row[j++]);
            for (std::size_t k = 0; k < l; ++k) {
                out.u.push_back(num(row[j++]));
            }
            for (std::size_t k = 0; k < m; ++k) {
                out.v.push_back(num(row[j++]));
            }
            out.t_star = num(row[j++]);
            for (std::size_t k = 0; k < l; ++k) {
                out.u_scaled.push_back(num(row[j++]));
            }
            out.cls = row[j++];
        }
        r.rows.push_back(std::move(out));
    }
    return r;
}

Report parse_report_json(std::string_view text) {
    nlohmann::json top;
    try {
        top = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("report JSON: ") + e.what());
    }
    if (!top.is_object() || !top.contains("dmus") || !top["dmus"].is_array()) {
        throw ValidationError("report JSON must be an object with a 'dmus' array");
    }
    Report r;
    for (const auto& j : top["dmus"]) {
        ReportRow row;
        row.name = j.at("name").get<std::string>();
        if (j.contains("error")) {
            row.error = j.at("error").get<std::string>();
        } else {
            row.theta = j.at("theta").get<double>();
            row.u = j.at("u").get<std::vector<double>>();
            row.v = j.at("v").get<std::vector<double>>();
            row.t_star = j.at("t_star").get<double>();
            row.u_scaled = j.at("u_scaled").get<std::vector<double>>();
            row.cls = j.at("class").get<std::string>();
        }
        r.rows.push_back(std::move(row));
    }
    return r;
}

} // namespace dea::io
