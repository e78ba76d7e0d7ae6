#include <barnesg/output.hpp>

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace barnesg {

OutputFormat parse_output_format(const std::string& name) {
    if (name == "text")
        return OutputFormat::Text;
    if (name == "json")
        return OutputFormat::Json;
    if (name == "csv")
        return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format: " + name);
}

namespace {

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_text(const OutputRecord& r) {
    std::ostringstream os;
    os << "# " << r.command;
    for (const auto& [k, v] : r.parameters)
        os << " " << k << "=" << v;
    os << " precision=" << r.precision_bits << "\n";
    for (const auto& [label, value] : r.results)
        os << label << ": " << value << "\n";
    if (!r.footnote.empty())
        os << "note: " << r.footnote << "\n";
    return os.str();
}

std::string render_json(const OutputRecord& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.parameters)
        params[k] = v;
    j["parameters"] = params;
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& [label, value] : r.results)
        results.push_back(nlohmann::ordered_json{{"label", label}, {"value", value}});
    j["results"] = results;
    j["precision_bits"] = r.precision_bits;
    j["format_version"] = r.format_version;
    if (!r.footnote.empty())
        j["footnote"] = r.footnote;
    return j.dump(2) + "\n";
}

std::string render_csv(const OutputRecord& r) {
    std::ostringstream os;
    os << "label,value\n";
    for (const auto& [label, value] : r.results)
        os << csv_quote(label) << "," << csv_quote(value) << "\n";
    return os.str();
}

} // namespace

std::string render(const OutputRecord& record, OutputFormat format) {
    switch (format) {
    case OutputFormat::Text:
        return render_text(record);
    case OutputFormat::Json:
        return render_json(record);
    case OutputFormat::Csv:
        return render_csv(record);
    }
    throw std::logic_error("render: unreachable");
}

} // namespace barnesg
