#pragma once

#include "ybsl21/superpoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybsl21 {

enum class Status { Pass, Fail, Error };

std::string to_string(Status s);

/// One counterexample: the input that distinguished the two sides.
struct Failure {
    std::string input;
    std::string lhs;
    std::string rhs;
    std::string residual;
};

/// Named sub-equation of a composite check.
struct CheckItem {
    std::string name;
    Status status = Status::Pass;
};

/// Machine-readable outcome of one check. status == Pass iff failures is
/// empty and no error was recorded.
struct CheckReport {
    std::string check_name;
    std::vector<std::pair<std::string, std::string>> params;
    int max_degree = 0;
    Status status = Status::Pass;
    std::vector<Failure> failures;
    std::size_t failure_count = 0;
    std::vector<CheckItem> items;
    std::vector<std::string> notes;
    std::optional<std::string> error;
    std::optional<double> elapsed_ms;

    /// Only the first few counterexamples are kept; all are counted.
    static constexpr std::size_t kMaxStoredFailures = 5;

    [[nodiscard]] bool passed() const { return status == Status::Pass; }

    void add_param(std::string name, const Rational& value);
    void add_failure(Failure f);
    void set_error(std::string message);

    /// Compares exact polynomials; records a failure labelled `input` when they differ.
    bool expect_equal(const std::string& input, const SuperPolynomial& lhs, const SuperPolynomial& rhs);
    /// Records a boolean sub-condition.
    bool expect(const std::string& input, bool ok, const std::string& detail = {});

    /// Folds `sub` into this report as the item `sub.check_name`.
    void absorb(const CheckReport& sub);
};

}  // namespace ybsl21
