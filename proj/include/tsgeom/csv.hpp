#ifndef TSGEOM_CSV_HPP
#define TSGEOM_CSV_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsgeom/signal.hpp"

namespace tsgeom {

/// Named channels of equal length sharing one sample rate.
struct ChannelTable {
    std::vector<Signal> channels;
    std::string source_path;
    std::size_t rows = 0;         // data rows parsed
    std::size_t skipped_rows = 0; // blank or malformed rows dropped (strict = false)

    const Signal& channel(std::string_view name) const; // throws IngestError
};

struct CsvOptions {
    /// Sample rate from the command line. The file may instead carry a
    /// "# fs=<value>" directive; if both are present they must agree.
    std::optional<double> sample_rate;
    /// true: any malformed row is an error naming the line.
    /// false: malformed rows are skipped and counted.
    bool strict = false;
};

/// Reads a CSV file with a header row naming the channels. Lines starting
/// with '#' are directives ("# fs=256") or comments. Throws IngestError.
ChannelTable read_csv(const std::string& path, const CsvOptions& options);

/// Same parser over an in-memory buffer.
ChannelTable parse_csv(std::string_view text, const std::string& path, const CsvOptions& options);

/// Renders channels as CSV with a "# fs=" directive and header row, using
/// shortest round-trip number formatting so output is byte-stable.
std::string render_signal_csv(std::span<const Signal> channels);

std::string read_file(const std::string& path);            // throws IngestError
void write_file(const std::string& path, std::string_view bytes); // throws IngestError

} // namespace tsgeom

#endif // TSGEOM_CSV_HPP
