#pragma once

#include "lzbg/lz_parse.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lzbg {

struct ManifestEntry {
    std::string name;
    std::string path;
};

/// Parses "name<TAB>path" lines; blank lines and lines starting with '#' are skipped.
/// Throws FormatError for a line without a tab.
std::vector<ManifestEntry> parse_manifest(std::istream& in);

struct BenchRow {
    std::string name;
    Variant variant = Variant::BGoneT;
    bool failed = false;
    std::string error;
    std::size_t n = 0;
    std::size_t factors = 0;
    double t_sa_ms = 0;
    double t_phi_ms = 0;
    double t_nsv_ms = 0;
    double t_parse_ms = 0;
    double t_total_ms = 0;
    std::size_t peak_aux_words = 0;
    int array_count = 0;
};

struct BenchOptions {
    std::vector<Variant> variants{kAllVariants.begin(), kAllVariants.end()};
    int repeat = 1; // timings of the fastest run are reported
};

/// One row for a text already in memory.
BenchRow bench_text(const std::string& name, const Text& text, Variant v, int repeat = 1);

/// Runs every manifest entry with every variant, writing the TSV header and one row
/// per (input, variant) to out as soon as it is measured. Unreadable inputs produce
/// failed rows and the run continues.
std::vector<BenchRow> run_benchmark(const std::vector<ManifestEntry>& manifest,
                                    const BenchOptions& opts, std::ostream& out);

void write_bench_header(std::ostream& out);
void write_bench_row(std::ostream& out, const BenchRow& row);

} // namespace lzbg
