#include "lzbg/bench.hpp"

#include "io.hpp"
#include "lzbg/errors.hpp"

#include <iomanip>
#include <istream>
#include <ostream>

namespace lzbg {

std::vector<ManifestEntry> parse_manifest(std::istream& in) {
    std::vector<ManifestEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw FormatError("manifest line " + std::to_string(lineno) + ": expected name<TAB>path");
        entries.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return entries;
}

BenchRow bench_text(const std::string& name, const Text& text, Variant v, int repeat) {
    BenchRow row;
    row.name = name;
    row.variant = v;
    row.n = text.size();
    row.array_count = array_count(v);
    for (int r = 0; r < std::max(repeat, 1); ++r) {
        PipelineStats st;
        const Factorization f = factorize(text, v, &st);
        if (r == 0 || st.t_total_ms < row.t_total_ms) {
            row.factors = f.factors.size();
            row.t_sa_ms = st.t_sa_ms;
            row.t_phi_ms = st.t_phi_ms;
            row.t_nsv_ms = st.t_nsv_ms;
            row.t_parse_ms = st.t_parse_ms;
            row.t_total_ms = st.t_total_ms;
            row.peak_aux_words = st.space.peak_aux_words();
        }
    }
    return row;
}

void write_bench_header(std::ostream& out) {
    out << "name\talgo\tn\tfactors\tt_sa_ms\tt_phi_ms\tt_nsv_ms\tt_parse_ms\tt_total_ms\t"
           "peak_aux_words\tarray_count\n";
}

void write_bench_row(std::ostream& out, const BenchRow& row) {
    out << row.name << '\t' << variant_name(row.variant) << '\t';
    if (row.failed) {
        for (int i = 0; i < 8; ++i) out << "failed\t";
        out << row.array_count << '\n';
        return;
    }
    out << row.n << '\t' << row.factors << '\t' << std::fixed << std::setprecision(3)
        << row.t_sa_ms << '\t' << row.t_phi_ms << '\t' << row.t_nsv_ms << '\t' << row.t_parse_ms
        << '\t' << row.t_total_ms << '\t' << row.peak_aux_words << '\t' << row.array_count << '\n';
    out.unsetf(std::ios::floatfield);
}

std::vector<BenchRow> run_benchmark(const std::vector<ManifestEntry>& manifest,
                                    const BenchOptions& opts, std::ostream& out) {
    std::vector<BenchRow> rows;
    write_bench_header(out);
    for (const ManifestEntry& e : manifest) {
        std::string data;
        std::string error;
        try {
            data = read_file(e.path);
        } catch (const IoError& ex) {
            error = ex.what();
        }
        for (Variant v : opts.variants) {
            BenchRow row;
            if (!error.empty()) {
                row.name = e.name;
                row.variant = v;
                row.failed = true;
                row.error = error;
                row.array_count = array_count(v);
            } else {
                row = bench_text(e.name, Text(std::string_view(data)), v, opts.repeat);
            }
            write_bench_row(out, row);
            out.flush();
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace lzbg
