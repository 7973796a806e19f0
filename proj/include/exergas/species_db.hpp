#pragma once

#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "exergas/environment.hpp"
#include "exergas/errors.hpp"
#include "exergas/species.hpp"
#include "exergas/species_data.hpp"

namespace exergas {

/// Species every model run depends on. "H2O" is the vapor, "H2O_liq" the
/// liquid, "C_gr" graphite (reference phase for the heterogeneous
/// methanation equilibrium).
inline const std::vector<std::string>& required_species() {
    static const std::vector<std::string> names = {
        "O2", "N2", "CO2", "H2O", "H2O_liq", "CO",
        "H2", "CH4", "SO2", "NO", "NO2", "C_gr",
    };
    return names;
}

namespace detail {

inline std::map<std::string, int> parse_formula(const std::string& f, int line) {
    std::map<std::string, int> out;
    size_t i = 0;
    while (i < f.size()) {
        if (!std::isupper(static_cast<unsigned char>(f[i])))
            throw ParseError("malformed formula '" + f + "'", line);
        std::string el(1, f[i++]);
        if (i < f.size() && std::islower(static_cast<unsigned char>(f[i])))
            el += f[i++];
        int n = 0;
        while (i < f.size() && std::isdigit(static_cast<unsigned char>(f[i])))
            n = n * 10 + (f[i++] - '0');
        out[el] += n == 0 ? 1 : n;
    }
    if (out.empty())
        throw ParseError("empty formula", line);
    return out;
}

inline double parse_number(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected a number, got '" + tok + "'", line);
    }
}

}  // namespace detail

/// Immutable species database plus the reference-environment bookkeeping
/// derived from it. Load once, share freely (all queries are const).
class SpeciesDb {
public:
    /// Parse the data-file format from any stream. Validates molar masses,
    /// segment ordering/contiguity, standard-state coverage, heat-capacity
    /// continuity and presence of all required species.
    static SpeciesDb parse(std::istream& in) {
        SpeciesDb db;
        std::string raw;
        int line_no = 0;
        std::vector<std::string> pending;  // non-comment tokens not yet consumed

        auto next_tokens = [&](int expected, int at_line) -> std::vector<std::string> {
            std::vector<std::string> toks;
            while (std::getline(in, raw)) {
                ++line_no;
                auto hash = raw.find('#');
                if (hash != std::string::npos) raw.erase(hash);
                std::istringstream ls(raw);
                std::string t;
                while (ls >> t) toks.push_back(t);
                if (!toks.empty()) return toks;
            }
            if (expected > 0)
                throw ParseError("unexpected end of file", at_line > 0 ? at_line : line_no);
            return toks;
        };

        while (true) {
            std::vector<std::string> head;
            // headers are read lazily so a trailing blank/comment tail is fine
            while (std::getline(in, raw)) {
                ++line_no;
                auto hash = raw.find('#');
                if (hash != std::string::npos) raw.erase(hash);
                std::istringstream ls(raw);
                std::string t;
                while (ls >> t) head.push_back(t);
                if (!head.empty()) break;
            }
            if (head.empty()) break;  // EOF

            if (head.size() != 6)
                throw ParseError("species header needs 6 fields "
                                 "(name formula molar_mass h_f0 ex_ch0 n_segments), got " +
                                 std::to_string(head.size()), line_no);
            SpeciesRecord sp;
            int header_line = line_no;
            sp.name = head[0];
            sp.formula = head[1];
            sp.elements = detail::parse_formula(sp.formula, header_line);
            sp.molar_mass = detail::parse_number(head[2], header_line);
            sp.h_f0 = detail::parse_number(head[3], header_line);
            sp.ex_ch0 = detail::parse_number(head[4], header_line);
            double nseg_f = detail::parse_number(head[5], header_line);
            int nseg = static_cast<int>(nseg_f);
            if (nseg < 1 || nseg != nseg_f)
                throw ParseError("segment count must be a positive integer", header_line);

            for (int k = 0; k < nseg; ++k) {
                auto toks = next_tokens(9, header_line);
                if (toks.size() != 9)
                    throw ParseError("segment line needs 9 numbers, got " +
                                     std::to_string(toks.size()), line_no);
                PolySegment seg;
                seg.T_low = detail::parse_number(toks[0], line_no);
                seg.T_high = detail::parse_number(toks[1], line_no);
                for (int j = 0; j < 5; ++j)
                    seg.c[j] = detail::parse_number(toks[2 + j], line_no);
                seg.b1 = detail::parse_number(toks[7], line_no);
                seg.b2 = detail::parse_number(toks[8], line_no);
                if (!(seg.T_low > 0.0 && seg.T_high > seg.T_low))
                    throw ParseError("segment range must satisfy 0 < T_low < T_high", line_no);
                sp.segments.push_back(seg);
            }
            db.validate_record(sp, header_line);
            if (db.index_.count(sp.name))
                throw ParseError("duplicate species '" + sp.name + "'", header_line);
            db.index_[sp.name] = db.records_.size();
            db.records_.push_back(std::move(sp));
        }

        for (const auto& name : required_species())
            if (!db.index_.count(name))
                throw MissingSpeciesError(name);
        db.derive_reference_fractions();
        return db;
    }

    static SpeciesDb load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in)
            throw InvalidInputError("cannot open species data file '" + path + "'");
        return parse(in);
    }

    static SpeciesDb load_text(const std::string& text) {
        std::istringstream in(text);
        return parse(in);
    }

    /// The dataset compiled into the library.
    static const SpeciesDb& builtin() {
        static const SpeciesDb db = load_text(builtin_species_text());
        return db;
    }

    const SpeciesRecord& at(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw MissingSpeciesError(name);
        return records_[it->second];
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    const std::vector<SpeciesRecord>& records() const { return records_; }

    /// Standard chemical exergy of a species at dead-state temperature T0,
    /// kJ/mol. At the tabulation temperature (298.15 K) this is the record
    /// value bit-for-bit; at a shifted T0 the value is rebuilt from the fixed
    /// effective reference mole fractions implied by the anchor species, which
    /// keeps the whole accounting element-consistent at any dead state.
    double chemical_exergy_ref(const std::string& name,
                               const ReferenceEnvironment& env = {}) const {
        const SpeciesRecord& sp = at(name);
        if (std::abs(env.T0 - kStandardT0) < 1e-12)
            return sp.ex_ch0;
        auto mu = element_potentials(env);
        double ex = gibbs_molar(sp, env.T0);
        for (const auto& [el, n] : sp.elements) {
            auto it = mu.find(el);
            if (it == mu.end())
                throw InvalidInputError("no reference potential for element '" + el +
                                        "' (species '" + name + "')");
            ex -= n * it->second;
        }
        return ex;
    }

    /// Reference chemical potentials mu_e(T0) per element, kJ/mol, from the
    /// anchor species O2, N2, CO2, H2O(g), SO2 and their effective reference
    /// mole fractions. These are what make exergy and entropy balances close
    /// exactly for any stream built from C/H/O/N/S species.
    std::map<std::string, double> element_potentials(const ReferenceEnvironment& env = {}) const {
        const double RuT0 = env.RuT0_kJ();
        auto mu_env = [&](const char* name) {
            return gibbs_molar(at(name), env.T0) + RuT0 * std::log(zref_.at(name));
        };
        std::map<std::string, double> mu;
        mu["O"] = mu_env("O2") / 2.0;
        mu["N"] = mu_env("N2") / 2.0;
        mu["C"] = mu_env("CO2") - 2.0 * mu["O"];
        mu["H"] = (mu_env("H2O") - mu["O"]) / 2.0;
        mu["S"] = mu_env("SO2") - 2.0 * mu["O"];
        return mu;
    }

    /// Effective reference mole fraction of an anchor species.
    double reference_fraction(const std::string& name) const { return zref_.at(name); }

private:
    void validate_record(const SpeciesRecord& sp, int line) const {
        // elemental mass must reproduce the declared molar mass
        double m = 0.0;
        for (const auto& [el, n] : sp.elements)
            m += n * atomic_mass(el);
        if (std::abs(m - sp.molar_mass) > 0.01)
            throw ParseError("species '" + sp.name + "': molar mass " +
                             std::to_string(sp.molar_mass) + " inconsistent with formula (" +
                             std::to_string(m) + ")", line);
        // segments sorted and contiguous
        for (size_t i = 1; i < sp.segments.size(); ++i) {
            double gap = sp.segments[i].T_low - sp.segments[i - 1].T_high;
            if (std::abs(gap) > 1e-9)
                throw RangeGapError("species '" + sp.name + "': segments leave a gap at " +
                                    std::to_string(sp.segments[i - 1].T_high) + " K");
        }
        if (!(sp.T_min() <= kStandardT0 && kStandardT0 <= sp.T_max()))
            throw ParseError("species '" + sp.name + "': range must cover 298.15 K", line);
        // heat capacity must agree across interior boundaries (0.5%)
        for (size_t i = 1; i < sp.segments.size(); ++i) {
            double Tb = sp.segments[i].T_low;
            double lo = sp.segments[i - 1].cp_over_Ru(Tb);
            double hi = sp.segments[i].cp_over_Ru(Tb);
            if (std::abs(hi - lo) > 5e-3 * std::abs(lo))
                throw ParseError("species '" + sp.name + "': cp mismatch of " +
                                 std::to_string(100.0 * std::abs(hi - lo) / std::abs(lo)) +
                                 "% at segment boundary " + std::to_string(Tb) + " K", line);
        }
    }

    void derive_reference_fractions() {
        // z* = exp(-ex_ch0 / (Ru * 298.15)); fixed once per database so a
        // shifted dead state reuses the same atmosphere model.
        const double RuT = kGasConstant * kStandardT0 / 1000.0;
        for (const char* name : {"O2", "N2", "CO2", "H2O", "SO2"})
            zref_[name] = std::exp(-at(name).ex_ch0 / RuT);
    }

    std::vector<SpeciesRecord> records_;
    std::map<std::string, size_t> index_;
    std::map<std::string, double> zref_;
};

}  // namespace exergas
