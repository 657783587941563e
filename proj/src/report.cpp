#include "ybsl21/report.hpp"

namespace ybsl21 {

std::string to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Error: return "error";
    }
    return "error";
}

void CheckReport::add_param(std::string name, const Rational& value) {
    params.emplace_back(std::move(name), render_rational(value));
}

void CheckReport::add_failure(Failure f) {
    ++failure_count;
    if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(f));
    if (status == Status::Pass) status = Status::Fail;
}

void CheckReport::set_error(std::string message) {
    error = std::move(message);
    status = Status::Error;
}

bool CheckReport::expect_equal(const std::string& input, const SuperPolynomial& lhs,
                               const SuperPolynomial& rhs) {
    if (lhs == rhs) return true;
    add_failure({input, lhs.render(), rhs.render(), (lhs - rhs).render()});
    return false;
}

bool CheckReport::expect(const std::string& input, bool ok, const std::string& detail) {
    if (!ok) add_failure({input, detail, "", ""});
    return ok;
}

void CheckReport::absorb(const CheckReport& sub) {
    items.push_back({sub.check_name, sub.status});
    for (const auto& f : sub.failures) {
        Failure g = f;
        g.input = sub.check_name + ": " + f.input;
        if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(g));
    }
    failure_count += sub.failure_count;
    for (const auto& n : sub.notes) notes.push_back(sub.check_name + ": " + n);
    if (sub.status == Status::Error) {
        status = Status::Error;
        if (!error) error = sub.check_name + ": " + sub.error.value_or("error");
    } else if (sub.status == Status::Fail && status == Status::Pass) {
        status = Status::Fail;
    }
}

}  // namespace ybsl21
