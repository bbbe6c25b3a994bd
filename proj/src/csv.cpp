#include "tsgeom/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace tsgeom {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

bool parse_double(std::string_view field, double& out) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end && std::isfinite(out);
}

// Shortest decimal representation that parses back to the same double.
void append_double(std::string& out, double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, ptr);
}

} // namespace

const Signal& ChannelTable::channel(std::string_view name) const {
    for (const Signal& s : channels)
        if (s.label == name) return s;
    throw IngestError("no channel named '" + std::string(name) + "' in " + source_path);
}

ChannelTable parse_csv(std::string_view text, const std::string& path, const CsvOptions& options) {
    ChannelTable table;
    table.source_path = path;

    std::optional<double> directive_fs;
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool header_seen = false;

    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;

        const std::string_view stripped = trim(line);
        if (stripped.empty()) {
            if (header_seen) ++table.skipped_rows; // blank data row
            continue;
        }
        if (stripped.front() == '#') {
            std::string_view body = trim(stripped.substr(1));
            if (body.substr(0, 3) == "fs=") {
                double fs = 0.0;
                if (!parse_double(trim(body.substr(3)), fs) || fs <= 0.0)
                    throw IngestError("bad fs directive", line_no);
                directive_fs = fs;
            }
            continue;
        }
        if (!header_seen) {
            for (auto field : split_fields(stripped)) {
                if (field.empty()) throw IngestError("empty column name in header", line_no);
                names.emplace_back(field);
            }
            columns.resize(names.size());
            header_seen = true;
            continue;
        }

        const auto fields = split_fields(stripped);
        bool ok = fields.size() == names.size();
        std::vector<double> row(names.size());
        if (ok) {
            for (std::size_t c = 0; c < fields.size(); ++c) {
                if (!parse_double(fields[c], row[c])) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            if (options.strict) throw IngestError("malformed row", line_no);
            ++table.skipped_rows;
            continue;
        }
        for (std::size_t c = 0; c < row.size(); ++c) columns[c].push_back(row[c]);
        ++table.rows;
    }

    if (!header_seen) throw IngestError("no header row in " + path);
    if (table.rows == 0) throw IngestError("no parsable data rows in " + path);

    double fs = 0.0;
    if (options.sample_rate && directive_fs) {
        if (*options.sample_rate != *directive_fs)
            throw IngestError("--fs disagrees with the file's fs directive");
        fs = *options.sample_rate;
    } else if (options.sample_rate) {
        fs = *options.sample_rate;
    } else if (directive_fs) {
        fs = *directive_fs;
    } else {
        throw IngestError("sample rate missing: pass --fs or add a '# fs=<value>' directive");
    }

    table.channels.reserve(names.size());
    for (std::size_t c = 0; c < names.size(); ++c)
        table.channels.emplace_back(std::move(columns[c]), fs, names[c]);
    return table;
}

ChannelTable read_csv(const std::string& path, const CsvOptions& options) {
    return parse_csv(read_file(path), path, options);
}

std::string render_signal_csv(std::span<const Signal> channels) {
    if (channels.empty()) throw InvalidInput("render_signal_csv: no channels");
    const std::size_t n = channels[0].size();
    for (const Signal& s : channels) {
        if (s.size() != n) throw InvalidInput("render_signal_csv: channel lengths differ");
        if (s.sample_rate != channels[0].sample_rate)
            throw InvalidInput("render_signal_csv: sample rates differ");
    }

    std::string out;
    out.reserve(n * channels.size() * 12 + 64);
    out += "# fs=";
    append_double(out, channels[0].sample_rate);
    out += '\n';
    for (std::size_t c = 0; c < channels.size(); ++c) {
        if (c) out += ',';
        out += channels[c].label.empty() ? ("ch" + std::to_string(c)) : channels[c].label;
    }
    out += '\n';
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < channels.size(); ++c) {
            if (c) out += ',';
            append_double(out, channels[c].samples[i]);
        }
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IngestError("cannot open file for writing: " + path);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IngestError("write failed: " + path);
}

} // namespace tsgeom
