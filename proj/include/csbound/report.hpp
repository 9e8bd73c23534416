#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "csbound/bench.hpp"
#include "csbound/bounds.hpp"

namespace csbound {

// full round-trip precision; infinities render as the literal "inf"
std::string format_value(double v);

// "# key = value" comment lines echoing the effective configuration, so
// every result file is self-describing
void write_config_echo(std::ostream& os, const SweepConfig& cfg);

struct BoundTableRow {
    int n = 0;
    double nonblind_bound_db = 0.0;
    double blind_bound_db = 0.0;
    double nonblind_per_coeff = 0.0;
    double blind_per_coeff = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a = 0.0;
    Regime regime = Regime::Ok;
};

std::string regime_name(Regime r);

std::vector<BoundTableRow> bound_table(const CsModel& model,
                                       const std::vector<int>& n_grid);

void write_bound_csv(std::ostream& os, const std::vector<BoundTableRow>& rows);

void write_sweep_csv(std::ostream& os, const SweepResult& result);

// wide table, one column per curve, for direct gnuplot consumption
void write_sweep_gnuplot(std::ostream& os, const SweepResult& result);

struct VerifyRow {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

void write_verify_csv(std::ostream& os, const std::vector<VerifyRow>& rows);

}  // namespace csbound
