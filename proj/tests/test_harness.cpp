// Copyright 2026 The QLGA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "qlga/harness/complexity_report.hpp"
#include "qlga/harness/config.hpp"
#include "qlga/harness/convergence.hpp"
#include "qlga/harness/equivalence.hpp"
#include "qlga/harness/svg_plot.hpp"

using namespace qlga;
using namespace qlga::harness;

TEST_CASE("config parsing") {
    SUBCASE("minimal config fills defaults") {
        const auto c = parse_config("variant = basic\nL = 32\nmass = 2\nend_time = 0.5\n");
        CHECK(c.variant == Variant::basic);
        CHECK(c.lattice_sizes == std::vector<std::size_t>{32});
        CHECK(c.mass == 2.0);
        CHECK(c.end_time == 0.5);
        CHECK(c.dimensionality == 1);
        CHECK(c.epsilon_policy == EpsilonPolicy::proportional);
        CHECK(c.domain == 1.0);
        CHECK(c.threads == 1);
        CHECK(c.phase == PhasePolicy::phase);
        CHECK(c.initial.kind == InitialKind::gaussian);
        CHECK(c.initial.width == 1.0 / 16.0);
        CHECK(c.format == OutputFormat::both);
    }
    SUBCASE("sections and comments") {
        const auto c = parse_config(
            "# sweep\n[run]\nvariant = symmetrized\nL = 64,128,256  # three points\nepsilon = 0.1\n"
            "[initial]\nkind = random_gaussian\npolarization = 0,1,0,0\n[output]\ndir = out\nformat = csv\n");
        CHECK(c.lattice_sizes.size() == 3);
        CHECK(c.epsilon_policy == EpsilonPolicy::fixed);
        CHECK(c.epsilon == 0.1);
        CHECK(c.initial.kind == InitialKind::random_gaussian);
        CHECK(c.initial.polarization[1] == Amplitude{1.0});
        CHECK(c.output_dir == "out");
        CHECK(c.format == OutputFormat::csv);
    }
    SUBCASE("unknown key names the key and line") {
        CHECK_THROWS_WITH_AS(parse_config("variant = basic\n\nspeed = 3\n"),
                             doctest::Contains("line 3: unknown key 'speed'"), ConfigError);
        CHECK_THROWS_WITH_AS(parse_config("[initial]\nmass = 1\n"), doctest::Contains("'mass'"),
                             ConfigError);
    }
    SUBCASE("invalid values") {
        CHECK_THROWS_AS(parse_config("L = 64,32\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("L = 64,64\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("L = 48\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("end_time = 0\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("end_time = -1\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("variant = fancy\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("dimensionality = 2\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("[extra]\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("mass 1\n"), ConfigError);
        CHECK_THROWS_AS(parse_config("epsilon = 1.5\n"), ConfigError);
    }
    SUBCASE("seeded initial data is reproducible") {
        auto c = parse_config("[initial]\nkind = random_gaussian\n");
        c.seed = 42;
        const auto a = initial_field(c, Dims::line(32));
        const auto b = initial_field(c, Dims::line(32));
        CHECK(a.bitwise_equal(b));
        c.seed = 43;
        CHECK(!initial_field(c, Dims::line(32)).bitwise_equal(a));
    }
}

TEST_CASE("slope fit") {
    std::vector<double> dx, err;
    for (double L : {64.0, 128.0, 256.0, 512.0, 1024.0}) {
        dx.push_back(1.0 / L);
        err.push_back(std::pow(1.0 / L, 2.5));
    }
    CHECK(std::abs(fit_slope(dx, err) - 2.5) <= 1e-12);
    for (auto& e : err) e *= 7.0;
    CHECK(std::abs(fit_slope(dx, err) - 2.5) <= 1e-10);
    CHECK_THROWS(fit_slope(std::vector<double>{1.0}, std::vector<double>{1.0}));
    CHECK_THROWS(fit_slope(std::vector<double>{0.1, 0.2}, std::vector<double>{0.0, 1.0}));

    CHECK(never_decreases(std::vector<double>{1.0, 1.0, 2.0}));
    CHECK(!never_decreases(std::vector<double>{1.0, 2.0, 1.5}));
}

TEST_CASE("convergence sweep") {
    auto c = parse_config("variant = basic\nL = 32,64,128\n");
    const auto report = run_convergence(c);
    REQUIRE(report.records.size() == 3);
    CHECK(!report.convergence_failure);
    for (const auto& r : report.records) {
        CHECK(r.l2_error >= 0.0);
        CHECK(r.dx == 1.0 / double(r.L));
        CHECK(r.steps == r.L / 4);
        CHECK(r.op_count == op_count_line(Variant::basic, r.L).total);
    }
    CHECK(report.slope > 1.5);

    std::ostringstream csv;
    write_csv(report, csv);
    const std::string text = csv.str();
    CHECK(text.rfind("L,dx,steps,l2_error,op_count\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);

    std::ostringstream meta;
    write_metadata(report, c, meta);
    CHECK(meta.str().find("wall_time_seconds") != std::string::npos);

    SUBCASE("identical csv at any thread count") {
        for (int t : {2, 8}) {
            c.threads = t;
            std::ostringstream again;
            write_csv(run_convergence(c), again);
            CHECK(again.str() == text);
        }
    }
    SUBCASE("too few points") {
        c.lattice_sizes = {32, 64};
        CHECK_THROWS(run_convergence(c));
    }
}

TEST_CASE("equivalence suite") {
    const auto ok = run_equivalence();
    CHECK(ok.passed());
    for (const auto& chk : ok.checks) CHECK_MESSAGE(chk.passed, chk.name);

    EquivalenceOptions corrupt;
    corrupt.mapping.x_hat_sign = +1;
    const auto bad = run_equivalence(corrupt);
    CHECK(!bad.passed());
    std::ostringstream out;
    print_report(bad, out);
    CHECK(out.str().find("FAIL") != std::string::npos);
}

TEST_CASE("complexity report") {
    const Variant all[] = {Variant::basic, Variant::interleaved, Variant::symmetrized};
    const std::uint64_t sizes[] = {2, 4, 8, 64};
    const auto rows = complexity_table(all, sizes);
    REQUIRE(rows.size() == 12);
    CHECK(rows[2].count.total == 9236);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& in = rows[4 + i];
        const auto& sym = rows[8 + i];
        CHECK(sym.count.rho_c == 2 * in.count.rho_c);
        CHECK(sym.count.rho_s == 2 * in.count.rho_s);
    }
    for (const auto& r : rows) {
        CHECK(r.count == op_count(r.variant, r.count.lattice));
        CHECK(r.qubit.cost == r.count.total);
        CHECK(r.qubit.matches);
    }
    const auto& big = rows[3];
    CHECK(big.cost_per_qubit == doctest::Approx(5.0 / 2 + 12.0 / 4).epsilon(0.05));
    std::ostringstream csv;
    write_complexity_csv(rows, csv);
    CHECK(csv.str().find("basic,8,2048,5,12,9236,") != std::string::npos);
}

TEST_CASE("svg plot") {
    std::ostringstream out;
    write_loglog_svg({{"basic", {1.0 / 64, 1.0 / 128, 1.0 / 256}, {1e-3, 2.5e-4, 6e-5}}}, "dx", "error", out);
    const std::string s = out.str();
    CHECK(s.find("<svg") == 0);
    CHECK(s.find("<polyline") != std::string::npos);
    CHECK(s.find("slope 0.5") != std::string::npos);
    CHECK(s.find("slope 2.5") != std::string::npos);
    CHECK(s.find("</svg>") != std::string::npos);
    std::ostringstream bad;
    CHECK_THROWS(write_loglog_svg({{"x", {1.0}, {0.0}}}, "dx", "e", bad));
}
