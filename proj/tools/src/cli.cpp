#include "lzbg/cli.hpp"

#include "io.hpp"
#include "lzbg/bench.hpp"
#include "lzbg/codec.hpp"
#include "lzbg/conversions.hpp"
#include "lzbg/errors.hpp"
#include "lzbg/lz_parse.hpp"
#include "lzbg/oracles.hpp"
#include "lzbg/phi_builder.hpp"
#include "lzbg/sa_induce.hpp"
#include "lzbg/textgen.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <map>
#include <memory>
#include <optional>
#include <ostream>

namespace lzbg {
namespace {

struct Corpus {
    const char* name;
    const char* url;
};

constexpr Corpus kCorpusUrls[] = {
    {"english.200MB", "http://pizzachili.dcc.uchile.cl/texts/nlang/english.200MB.gz"},
    {"dna.200MB", "http://pizzachili.dcc.uchile.cl/texts/dna/dna.200MB.gz"},
    {"proteins.200MB", "http://pizzachili.dcc.uchile.cl/texts/protein/proteins.200MB.gz"},
    {"sources.200MB", "http://pizzachili.dcc.uchile.cl/texts/code/sources.200MB.gz"},
    {"dblp.xml.200MB", "http://pizzachili.dcc.uchile.cl/texts/xml/dblp.xml.200MB.gz"},
    {"pitches", "http://pizzachili.dcc.uchile.cl/texts/music/pitches.gz"},
    {"repcorpus", "http://pizzachili.dcc.uchile.cl/repcorpus.html"},
};

const std::map<std::string, Variant>& variant_map() {
    static const std::map<std::string, Variant> m = [] {
        std::map<std::string, Variant> r;
        for (Variant v : kAllVariants) r.emplace(std::string(variant_name(v)), v);
        return r;
    }();
    return m;
}

void emit(std::ostream& out, const std::string& path, const void* data, std::size_t size) {
    if (path.empty() || path == "-")
        out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
    else
        write_file(path, data, size);
}

void print_factor(std::ostream& out, const Factor& f) {
    if (f.is_literal()) {
        const std::uint8_t c = f.symbol();
        if (std::isgraph(c))
            out << "(0," << char(c) << ")\n";
        else
            out << "(0,\\x" << std::hex << std::setw(2) << std::setfill('0') << int(c)
                << std::dec << std::setfill(' ') << ")\n";
    } else {
        out << '(' << f.length << ',' << f.source() << ")\n";
    }
}

void write_stats(std::ostream& err, Variant v, std::size_t n, std::size_t factors,
                 const PipelineStats& st) {
    err << "algo\tn\tfactors\tt_sa_ms\tt_phi_ms\tt_nsv_ms\tt_parse_ms\tt_total_ms\tpeak_aux_words\n"
        << variant_name(v) << '\t' << n << '\t' << factors << '\t' << std::fixed
        << std::setprecision(3) << st.t_sa_ms << '\t' << st.t_phi_ms << '\t' << st.t_nsv_ms
        << '\t' << st.t_parse_ms << '\t' << st.t_total_ms << '\t' << st.space.peak_aux_words()
        << '\n';
    err.unsetf(std::ios::floatfield);
}

int cmd_factorize(const std::string& input, const std::string& output, Variant v, bool stats,
                  bool print, std::ostream& out, std::ostream& err) {
    const std::string data = read_file(input);
    const Text text{std::string_view(data)};
    PipelineStats st;
    const Factorization f = factorize(text, v, stats ? &st : nullptr);
    if (!output.empty()) {
        const auto stream = encode_stream(f);
        write_file(output, stream.data(), stream.size());
    }
    if (print)
        for (const Factor& x : f.factors) print_factor(out, x);
    else
        out << "n=" << f.n << "\tfactors=" << f.factors.size() << '\n';
    if (stats) write_stats(err, v, text.size(), f.factors.size(), st);
    return kExitOk;
}

int cmd_decode(const std::string& input, const std::string& output, std::ostream& out) {
    const std::string data = read_file(input);
    const auto bytes = decode_stream(
        std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
    emit(out, output, bytes.data(), bytes.size());
    return kExitOk;
}

int cmd_verify(const std::string& input, std::size_t oracle_limit, std::ostream& out,
               std::ostream& err) {
    const std::string data = read_file(input);
    const Text text{std::string_view(data)};
    const std::vector<std::uint8_t> original(data.begin(), data.end());
    bool ok = true;
    std::optional<Factorization> reference;
    for (Variant v : kAllVariants) {
        Factorization f;
        try {
            f = factorize(text, v);
        } catch (const std::exception& e) {
            err << variant_name(v) << ": failed: " << e.what() << '\n';
            ok = false;
            continue;
        }
        if (decode_stream(encode_stream(f)) != original) {
            err << variant_name(v) << ": decoded text differs from input\n";
            ok = false;
        }
        if (!reference) {
            reference = std::move(f);
        } else if (f != *reference) {
            err << variant_name(v) << ": factors differ from " << variant_name(kAllVariants[0])
                << '\n';
            ok = false;
        }
    }
    if (reference && text.size() <= oracle_limit) {
        const Factorization naive = oracle::naive_factorize(oracle::bytes_of(data));
        const bool same_lengths = std::equal(
            naive.factors.begin(), naive.factors.end(), reference->factors.begin(),
            reference->factors.end(),
            [](const Factor& a, const Factor& b) { return a.length == b.length; });
        if (!same_lengths) {
            err << "factor lengths differ from the brute-force factorization\n";
            ok = false;
        }
    }
    out << (ok ? "ok" : "mismatch") << "\tn=" << text.size()
        << "\tfactors=" << (reference ? reference->factors.size() : 0) << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

std::vector<word_t> longest_previous_factor(const Text& text) {
    const std::size_t n = text.size();
    Workspace ws(n);
    build_suffix_array(text, ws);
    std::vector<word_t> psv(n + 1), nsv(n + 1), lpf(n + 1);
    sa_to_psv_nsv(ws, psv, nsv);
    for (std::size_t i = 1; i <= n; ++i)
        lpf[i] = std::max(lcp_from(text, i, psv[i]), lcp_from(text, i, nsv[i]));
    return lpf;
}

int cmd_dump(const std::string& input, const std::string& array, std::ostream& out) {
    const std::string data = read_file(input);
    const Text text{std::string_view(data)};
    const std::size_t n = text.size();
    std::vector<word_t> values;
    if (array == "lpf") {
        values = longest_previous_factor(text);
    } else {
        Workspace ws(n);
        if (array == "sa") {
            build_suffix_array(text, ws);
        } else {
            build_phi_from_text(text, ws);
            if (array == "nsv") phi_to_nsv_inplace(ws);
        }
        values.assign(ws.cells().begin(), ws.cells().end());
    }
    for (std::size_t i = 1; i <= n; ++i) out << i << '\t' << values[i] << '\n';
    return kExitOk;
}

int cmd_bench(const std::string& manifest_path, const std::string& output,
              const std::vector<std::string>& algos, int repeat, std::ostream& out) {
    std::ifstream in(manifest_path);
    if (!in) throw IoError("cannot open " + manifest_path);
    const auto manifest = parse_manifest(in);
    BenchOptions opts;
    opts.repeat = repeat;
    if (!algos.empty()) {
        opts.variants.clear();
        for (const auto& a : algos) opts.variants.push_back(variant_map().at(a));
    }
    if (output.empty() || output == "-") {
        run_benchmark(manifest, opts, out);
    } else {
        std::ofstream file(output, std::ios::trunc);
        if (!file) throw IoError("cannot open " + output + " for writing");
        run_benchmark(manifest, opts, file);
    }
    return kExitOk;
}

int cmd_gen(const std::string& kind, std::size_t size, unsigned sigma, std::uint64_t seed,
            const std::string& output, std::ostream& out) {
    std::string text;
    if (kind == "random")
        text = textgen::random_text(size, sigma, seed);
    else if (kind == "repetitive")
        text = textgen::repetitive_text(size, seed);
    else if (kind == "english")
        text = textgen::english_like_text(size, seed);
    else
        text = textgen::fibonacci_word(size);
    emit(out, output, text.data(), text.size());
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"LZ77 factorization in a single integer array", "lzbg"};
    app.require_subcommand(1);

    std::string input, output, algo = "bgone-t", array, manifest, kind = "random";
    bool stats = false, print = false;
    std::size_t oracle_limit = 65536, size = 1 << 20;
    unsigned sigma = 4;
    std::uint64_t seed = 1;
    int repeat = 1;
    std::vector<std::string> algos;

    auto* fac = app.add_subcommand("factorize", "Factorize a file");
    fac->add_option("--input", input, "Input text")->required();
    fac->add_option("--output", output, "Write an LZBG1 stream");
    fac->add_option("--algo", algo, "Pipeline variant")
        ->check(CLI::IsMember(variant_map()));
    fac->add_flag("--stats", stats, "Print phase times and space as TSV on stderr");
    fac->add_flag("--print", print, "Print factors as (length,source) or (0,symbol)");

    auto* dec = app.add_subcommand("decode", "Decode an LZBG1 stream");
    dec->add_option("--input", input, "LZBG1 stream")->required();
    dec->add_option("--output", output, "Decoded text (stdout if omitted)");

    auto* ver = app.add_subcommand("verify", "Cross-check all variants, the codec and the brute force");
    ver->add_option("--input", input, "Input text")->required();
    ver->add_option("--oracle-limit", oracle_limit, "Largest n checked against the brute force");

    auto* dmp = app.add_subcommand("dump", "Print an index array, one 'i<TAB>value' per line");
    dmp->add_option("--input", input, "Input text")->required();
    dmp->add_option("--array", array, "Array to print")
        ->required()
        ->check(CLI::IsMember({"sa", "phi", "nsv", "lpf"}));

    auto* bch = app.add_subcommand("bench", "Run every manifest input with every variant");
    bch->add_option("--manifest", manifest, "Lines of name<TAB>path")->required();
    bch->add_option("--output", output, "Report TSV (stdout if omitted)");
    bch->add_option("--algo", algos, "Restrict to these variants")
        ->check(CLI::IsMember(variant_map()));
    bch->add_option("--repeat", repeat, "Runs per row; the fastest is reported")
        ->check(CLI::PositiveNumber);

    auto* gen = app.add_subcommand("gen", "Generate a synthetic text");
    gen->add_option("--kind", kind, "Text family")
        ->check(CLI::IsMember({"random", "repetitive", "english", "fibonacci"}));
    gen->add_option("--size", size, "Length in bytes");
    gen->add_option("--sigma", sigma, "Alphabet size for random text")->check(CLI::Range(1, 256));
    gen->add_option("--seed", seed, "Generator seed");
    gen->add_option("--output", output, "Output file (stdout if omitted)");

    auto* urls = app.add_subcommand("corpus-urls", "Print download URLs of the standard corpora");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (fac->parsed())
            return cmd_factorize(input, output, variant_map().at(algo), stats, print, out, err);
        if (dec->parsed()) return cmd_decode(input, output, out);
        if (ver->parsed()) return cmd_verify(input, oracle_limit, out, err);
        if (dmp->parsed()) return cmd_dump(input, array, out);
        if (bch->parsed()) return cmd_bench(manifest, output, algos, repeat, out);
        if (gen->parsed()) return cmd_gen(kind, size, sigma, seed, output, out);
        if (urls->parsed()) {
            for (const Corpus& c : kCorpusUrls) out << c.name << '\t' << c.url << '\n';
            return kExitOk;
        }
    } catch (const IoError& e) {
        err << "lzbg: " << e.what() << '\n';
        return kExitIo;
    } catch (const FormatError& e) {
        err << "lzbg: " << e.what() << '\n';
        return kExitIo;
    } catch (const StructureError& e) {
        err << "lzbg: " << e.what() << '\n';
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

} // namespace lzbg
