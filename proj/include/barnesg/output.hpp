#ifndef BARNESG_OUTPUT_HPP
#define BARNESG_OUTPUT_HPP

#include <string>
#include <utility>
#include <vector>

namespace barnesg {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_output_format(const std::string& name);

/*
 * One command invocation's machine-readable result. Rendering is fully
 * deterministic: identical records produce byte-identical output in every
 * format.
 */
struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> parameters; // insertion order
    std::vector<std::pair<std::string, std::string>> results;    // (label, value)
    unsigned long precision_bits = 0;
    int format_version = 1;
    std::string footnote; // optional; emitted only when nonempty

    void param(std::string key, std::string value) {
        parameters.emplace_back(std::move(key), std::move(value));
    }
    void result(std::string label, std::string value) {
        results.emplace_back(std::move(label), std::move(value));
    }
};

std::string render(const OutputRecord& record, OutputFormat format);

} // namespace barnesg

#endif
