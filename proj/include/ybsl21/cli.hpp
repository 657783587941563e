#pragma once

/**
 * @file cli.hpp
 * @brief Parameter sampling, check orchestration and JSON/text reporting
 *        behind the ybsl21 command-line tool.
 */

#include "ybsl21/lowest.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ybsl21::cli {

enum class Command {
    Algebra,
    Lax,
    Rll,
    Defining,
    Lemmas,
    Recurrences,
    Factorization,
    Ybe,
    Spectrum,
    All,
};

std::string to_string(Command c);
/// Accepts the names printed by to_string ("check-algebra", ..., "spectrum", "all").
std::optional<Command> parse_command(const std::string& name);

/// Order of "all"; ybe is appended only on request.
inline constexpr std::array<Command, 8> kSuiteOrder = {Command::Algebra,       Command::Lax,         Command::Rll,
                                                       Command::Defining,      Command::Lemmas,      Command::Recurrences,
                                                       Command::Factorization, Command::Spectrum};

enum class Format { Json, Text };

/// Bad flags, malformed rationals or explicit parameters that fail the guard. Exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// The sampler could not find regular parameters.
class GuardExhausted : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    Command command = Command::All;
    int max_degree = 3;
    std::uint64_t seed = 1;
    int samples = 3;
    std::optional<ParamPair> explicit_params;
    std::string output;  ///< empty: the stream passed to run
    Format format = Format::Json;
    bool with_ybe = false;  ///< "all" also runs check-ybe
    bool timing = false;    ///< adds elapsed_ms, which breaks byte-identical output
};

/// "u1,u2,u3,v1,v2,v3".
ParamPair parse_params(const std::string& text);
/// "l1,b1,l2,b2,u,v".
ParamPair parse_weights(const std::string& text);

/// Numerators in [-20, 20], denominators in [1, 8], drawn with mt19937_64 and
/// reduction modulo the range so the stream does not depend on the standard library.
class RationalSampler {
public:
    explicit RationalSampler(std::uint64_t seed);
    Rational next();

private:
    std::mt19937_64 rng_;
};

/// Regular pairs for degree bound D. Throws GuardExhausted after 1000 resamples.
std::vector<ParamPair> sample_params(std::uint64_t seed, int samples, int max_degree);

/// Weights accepted by `ok`, from an independent stream derived from (seed, salt).
std::vector<Weight> sample_weights(std::uint64_t seed, std::uint64_t salt, int samples,
                                   const std::function<bool(const Weight&)>& ok = {});

/// One YBE configuration: three weights and the spectral parameters u, v.
struct YbeConfig {
    Weight w1;
    Weight w2;
    Weight w3;
    Rational u;
    Rational v;
};

std::vector<YbeConfig> sample_ybe(std::uint64_t seed, int samples, int max_degree);

/// Degree bound used for sampling and guarding a run: recurrences need n <= 4.
int guard_degree(const RunConfig& cfg);

/// The reports of one command (not All), in a fixed order.
std::vector<CheckReport> run_suite(Command c, const RunConfig& cfg);

/// Computed against printed sector entries for n = 0..max_degree.
struct SpectrumRow {
    int n = 0;
    RWhich which = RWhich::R3;
    Sector sector = Sector::Even;
    std::string entry;  ///< "-+": coefficient of the - vector in the image of the + vector
    Rational computed;
    Rational formula;
    std::string note;
};

std::vector<SpectrumRow> spectrum_table(const ParamPair& p, int max_n);

std::string to_json_line(const CheckReport& r, const std::string& suite, bool timing);
std::string to_json_line(const SpectrumRow& row);
std::string to_text(const CheckReport& r, const std::string& suite);
std::string to_text(const SpectrumRow& row);

/// Runs the configured command and streams the reports to `out` (or cfg.output).
/// Returns 0 if everything passed, 1 on a failed check, 2 on configuration
/// errors, 3 on internal errors.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Flag parsing plus run; what the tool's main calls.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ybsl21::cli
