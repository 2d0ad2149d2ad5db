#include "fixture.hpp"

#include <bj/estimation.hpp>
#include <bj/ingest.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace bj::testing {

const TimeSeries& ipr_series() {
    static const TimeSeries ts = to_timeseries(load_fixture().records, Component::total);
    return ts;
}

const FittedModel& ipr_model() {
    static const FittedModel m = fit(ipr_series(), arima(3, 1, 0));
    return m;
}

ModelOrder arima(int p, int d, int q, bool drift) {
    ModelOrder o;
    o.p = p;
    o.d = d;
    o.q = q;
    o.drift = drift;
    return o;
}

namespace {

std::vector<std::string> split_quoted(const std::string& line) {
    std::vector<std::string> out(1);
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    return out;
}

double percent(std::string cell) {
    if (!cell.empty() && cell.back() == '%') cell.pop_back();
    return std::stod(cell);
}

}  // namespace

PrintedRates printed_rates() {
    std::ifstream in(BJ_FIXTURE_CSV);
    if (!in) throw std::runtime_error("cannot open " BJ_FIXTURE_CSV);
    PrintedRates r;
    std::string line;
    std::getline(in, line);
    const auto header = split_quoted(line);
    auto column = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::runtime_error("missing column " + name);
    };
    const auto label = column("year_quarter");
    const auto life = column("life_rate");
    const auto nonlife = column("nonlife_rate");
    const auto total = column("total_rate");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto cells = split_quoted(line);
        r.labels.push_back(cells.at(label));
        r.life.push_back(percent(cells.at(life)));
        r.nonlife.push_back(percent(cells.at(nonlife)));
        r.total.push_back(percent(cells.at(total)));
    }
    return r;
}

std::vector<double> white_noise(std::size_t n, std::uint64_t seed, double sd) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, sd);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    return x;
}

std::vector<double> random_walk(std::size_t n, std::uint64_t seed) {
    auto x = white_noise(n, seed);
    for (std::size_t i = 1; i < n; ++i) x[i] += x[i - 1];
    return x;
}

std::vector<double> uniform_sample(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> x(n);
    for (auto& v : x) v = dist(rng);
    return x;
}

}  // namespace bj::testing
