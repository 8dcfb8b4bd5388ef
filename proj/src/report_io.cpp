#include "reccf/report_io.hpp"

#include <ostream>

namespace reccf {

namespace {

OrderedJson json_or_null(const std::optional<double>& value) {
    if (!value) {
        return nullptr;
    }
    return format_double(*value);
}

}  // namespace

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

OrderedJson to_json(const ScanReport& report) {
    OrderedJson config{{"command", report.config.command},
                       {"alpha", report.config.alpha},
                       {"beta", report.config.beta},
                       {"n_from", report.config.n_from},
                       {"n_to", report.config.n_to}};
    OrderedJson records = OrderedJson::array();
    for (const ScanRecord& rec : report.records) {
        OrderedJson j{{"n", rec.n}, {"skipped", rec.skipped}};
        if (!rec.skipped) {
            j["psi"] = rec.psi;
            j["num_digits"] = rec.num_digits;
            j["den_digits"] = rec.den_digits;
        }
        records.push_back(std::move(j));
    }
    OrderedJson windows = OrderedJson::array();
    for (const WindowStat& win : report.windows) {
        OrderedJson j{{"n_lo", win.n_lo},
                      {"n_hi", win.n_hi},
                      {"count", win.count}};
        if (win.count > 0) {
            j["min_psi"] = win.min_psi;
            j["max_psi"] = win.max_psi;
        }
        windows.push_back(std::move(j));
    }
    return OrderedJson{{"config", std::move(config)},
                       {"records", std::move(records)},
                       {"windows", std::move(windows)}};
}

OrderedJson to_json(const ThueReport& report) {
    OrderedJson config{{"alpha", report.config.alpha},
                       {"beta", report.config.beta},
                       {"n_from", report.config.n_from},
                       {"n_to", report.config.n_to},
                       {"q0", to_string(report.config.q0)},
                       {"epsilon0", format_double(report.config.epsilon0)},
                       {"euclid_step", report.config.euclid_step}};
    OrderedJson records = OrderedJson::array();
    for (const ThueRecord& rec : report.records) {
        OrderedJson j{{"n", rec.n}, {"skipped", rec.skipped}};
        if (!rec.skipped) {
            OrderedJson convs = OrderedJson::array();
            for (const ThueConvergentRecord& crec : rec.convergents) {
                convs.push_back(
                    OrderedJson{{"r", crec.index},
                                {"q", to_string(crec.q)},
                                {"abs_delta", to_string(crec.abs_delta)},
                                {"exact", crec.exact},
                                {"exponent", json_or_null(crec.exponent)}});
            }
            j["max_exponent"] = json_or_null(rec.max_exponent);
            j["convergents"] = std::move(convs);
        }
        records.push_back(std::move(j));
    }
    OrderedJson summary{
        {"max_exponent", json_or_null(report.summary.max_exponent)},
        {"exceeding_epsilon0", report.summary.exceeding_epsilon0}};
    return OrderedJson{{"config", std::move(config)},
                       {"records", std::move(records)},
                       {"summary", std::move(summary)}};
}

OrderedJson to_json(const DenomReport& report) {
    OrderedJson config{
        {"zeta", report.config.zeta},
        {"n_from", report.config.n_from},
        {"n_to", report.config.n_to},
        {"clearing_denominator", to_string(report.config.clearing_denominator)}};
    OrderedJson records = OrderedJson::array();
    for (const DenomRecord& rec : report.records) {
        records.push_back(
            OrderedJson{{"n", rec.n},
                        {"denominator", to_string(rec.denominator)},
                        {"clearing_denominator",
                         to_string(report.config.clearing_denominator)},
                        {"ratio", format_double(rec.ratio)}});
    }
    OrderedJson summary{{"min_ratio", format_double(report.min_ratio)}};
    return OrderedJson{{"config", std::move(config)},
                       {"records", std::move(records)},
                       {"summary", std::move(summary)}};
}

void write_csv(const ScanReport& report, std::ostream& out) {
    out << "n,skipped,psi,num_digits,den_digits\n";
    for (const ScanRecord& rec : report.records) {
        out << rec.n << ',' << (rec.skipped ? "true" : "false") << ',';
        if (rec.skipped) {
            out << ",,";
        } else {
            out << rec.psi << ',' << rec.num_digits << ',' << rec.den_digits;
        }
        out << '\n';
    }
}

void write_csv(const ThueReport& report, std::ostream& out) {
    out << "n,skipped,r,q,abs_delta,exact,exponent,n_max_exponent\n";
    for (const ThueRecord& rec : report.records) {
        const std::string n_max =
            rec.max_exponent ? format_double(*rec.max_exponent) : "";
        if (rec.skipped || rec.convergents.empty()) {
            out << rec.n << ',' << (rec.skipped ? "true" : "false")
                << ",,,,,," << n_max << '\n';
            continue;
        }
        for (const ThueConvergentRecord& crec : rec.convergents) {
            out << rec.n << ",false," << crec.index << ','
                << to_string(crec.q) << ','
                << csv_field(to_string(crec.abs_delta)) << ','
                << (crec.exact ? "true" : "false") << ','
                << (crec.exponent ? format_double(*crec.exponent) : "") << ','
                << n_max << '\n';
        }
    }
}

void write_csv(const DenomReport& report, std::ostream& out) {
    out << "n,denominator,clearing_denominator,ratio\n";
    for (const DenomRecord& rec : report.records) {
        out << rec.n << ',' << to_string(rec.denominator) << ','
            << to_string(report.config.clearing_denominator) << ','
            << format_double(rec.ratio) << '\n';
    }
}

void write_text(const ScanReport& report, std::ostream& out) {
    out << report.config.command << ": (" << report.config.alpha << ") / ("
        << report.config.beta << "), n = " << report.config.n_from << ".."
        << report.config.n_to << '\n';
    for (const ScanRecord& rec : report.records) {
        if (rec.skipped) {
            out << "n=" << rec.n << " skipped (denominator vanishes)\n";
        } else {
            out << "n=" << rec.n << " psi=" << rec.psi
                << " digits=" << rec.num_digits << "/" << rec.den_digits
                << '\n';
        }
    }
    for (const WindowStat& win : report.windows) {
        out << "window [" << win.n_lo << ", " << win.n_hi << "]";
        if (win.count > 0) {
            out << " min_psi=" << win.min_psi << " max_psi=" << win.max_psi;
        } else {
            out << " empty";
        }
        out << '\n';
    }
}

void write_text(const ThueReport& report, std::ostream& out) {
    out << "thue: (" << report.config.alpha << ") / (" << report.config.beta
        << "), n = " << report.config.n_from << ".." << report.config.n_to
        << ", q0 = " << to_string(report.config.q0) << '\n';
    out << "euclid step: " << report.config.euclid_step << '\n';
    for (const ThueRecord& rec : report.records) {
        if (rec.skipped) {
            out << "n=" << rec.n << " skipped (denominator vanishes)\n";
            continue;
        }
        out << "n=" << rec.n << " convergents=" << rec.convergents.size();
        if (rec.max_exponent) {
            out << " max_exponent=" << format_double(*rec.max_exponent);
        }
        out << '\n';
    }
    if (report.summary.max_exponent) {
        out << "overall max exponent: "
            << format_double(*report.summary.max_exponent) << '\n';
    }
    out << "exponents above epsilon0: " << report.summary.exceeding_epsilon0
        << '\n';
}

void write_text(const DenomReport& report, std::ostream& out) {
    out << "denom: " << report.config.zeta
        << ", D = " << to_string(report.config.clearing_denominator)
        << ", n = " << report.config.n_from << ".." << report.config.n_to
        << '\n';
    for (const DenomRecord& rec : report.records) {
        out << "n=" << rec.n << " denominator=" << to_string(rec.denominator)
            << " ratio=" << format_double(rec.ratio) << '\n';
    }
    out << "min ratio: " << format_double(report.min_ratio) << '\n';
}

}  // namespace reccf
