#pragma once

#include "gpl/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gpl {

class Config;

struct SuiteOptions {
    int d = 2;
    std::optional<Rational> alpha;
    uint64_t seed = 1;
    std::optional<size_t> samples;
    std::optional<Rational> cutoff;
};

struct SuiteResult {
    std::string name;
    size_t checked = 0;
    size_t failed = 0;
    std::vector<std::string> messages;  // first few failures
    bool ok() const { return failed == 0; }
    void fail(std::string what);
    void merge(const SuiteResult& o);
};

struct SuiteInfo {
    std::string name;
    std::string citation;
    Rational alpha;
    size_t samples;
    Rational cutoff;
    std::function<SuiteResult(const Config&, uint64_t seed, size_t samples, const Rational& cutoff)> run;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(const std::string& name);
// Throws std::out_of_range for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace gpl
