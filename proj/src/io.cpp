#include "mtx/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mtx/sweep.hpp"

namespace mtx {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

struct ParsedFile {
    const Field* field = nullptr;
    std::vector<Block> blocks;
    std::vector<std::vector<std::string>> gen_segments;   // raw poly encodings per generator
    std::vector<std::pair<unsigned, std::vector<std::string>>> part_rows; // (w, elems)
};

[[noreturn]] void fail_line(size_t lineno, const std::string& msg) {
    throw MtxError("line " + std::to_string(lineno) + ": " + msg);
}

std::vector<std::string> split_segments(const std::vector<std::string>& toks, size_t from,
                                        size_t lineno) {
    // join tokens, split on '|', keep per-segment strings
    std::vector<std::string> segs(1, "");
    for (size_t i = from; i < toks.size(); ++i) {
        std::string t = toks[i];
        size_t pos;
        while ((pos = t.find('|')) != std::string::npos) {
            segs.back() += " " + t.substr(0, pos);
            segs.emplace_back();
            t = t.substr(pos + 1);
        }
        segs.back() += " " + t;
    }
    for (auto& s : segs) {
        std::istringstream is(s);
        std::string probe;
        if (!(is >> probe)) fail_line(lineno, "empty segment between '|'");
    }
    return segs;
}

ParsedFile parse_file(const std::string& text, bool allow_parts) {
    ParsedFile pf;
    std::istringstream is(text);
    std::string line;
    size_t lineno = 0;
    bool blocks_done = false;
    while (std::getline(is, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (kw == "field") {
            if (pf.field) fail_line(lineno, "duplicate field line");
            if (toks.size() < 3 || toks.size() > 4) fail_line(lineno, "usage: field <p> <k> [modulus]");
            uint64_t p = 0;
            unsigned k = 0;
            try {
                p = std::stoull(toks[1]);
                k = static_cast<unsigned>(std::stoul(toks[2]));
            } catch (...) {
                fail_line(lineno, "field parameters must be integers");
            }
            try {
                if (toks.size() == 4) {
                    std::vector<uint32_t> mod;
                    std::string cur;
                    for (char ch : toks[3] + ",") {
                        if (ch == ',') {
                            if (cur.empty()) fail_line(lineno, "bad modulus encoding");
                            mod.push_back(static_cast<uint32_t>(std::stoul(cur)));
                            cur.clear();
                        } else {
                            cur += ch;
                        }
                    }
                    pf.field = Field::make(p, k, mod);
                } else {
                    pf.field = Field::make(p, k);
                }
            } catch (const MtxError& e) {
                fail_line(lineno, e.what());
            }
        } else if (kw == "block") {
            if (!pf.field) fail_line(lineno, "block before field line");
            if (blocks_done) fail_line(lineno, "block lines must precede gen lines");
            if (toks.size() != 3) fail_line(lineno, "usage: block <m> <lambda>");
            unsigned m = 0;
            try {
                m = static_cast<unsigned>(std::stoul(toks[1]));
            } catch (...) {
                fail_line(lineno, "block length must be an integer");
            }
            FieldElement lam;
            try {
                lam = pf.field->decode(toks[2]);
            } catch (const MtxError& e) {
                fail_line(lineno, e.what());
            }
            if (lam.is_zero()) fail_line(lineno, "lambda must be nonzero");
            if (m == 0) fail_line(lineno, "block length must be positive");
            if (m % pf.field->characteristic() == 0)
                fail_line(lineno, "block " + std::to_string(pf.blocks.size() + 1) +
                                      ": gcd(m, q) != 1");
            pf.blocks.push_back({m, lam});
        } else if (kw == "gen") {
            if (pf.blocks.empty()) fail_line(lineno, "gen before block lines");
            blocks_done = true;
            auto segs = split_segments(toks, 1, lineno);
            if (segs.size() != pf.blocks.size())
                fail_line(lineno, "generator has " + std::to_string(segs.size()) +
                                      " segments, expected " + std::to_string(pf.blocks.size()));
            pf.gen_segments.push_back(segs);
        } else if (kw == "part" && allow_parts) {
            if (pf.blocks.empty()) fail_line(lineno, "part before block lines");
            blocks_done = true;
            if (toks.size() < 3) fail_line(lineno, "usage: part <w> <elem> | <elem> | ...");
            unsigned w = 0;
            try {
                w = static_cast<unsigned>(std::stoul(toks[1]));
            } catch (...) {
                fail_line(lineno, "part index must be an integer");
            }
            auto segs = split_segments(toks, 2, lineno);
            if (segs.size() != pf.blocks.size())
                fail_line(lineno, "part row has " + std::to_string(segs.size()) +
                                      " entries, expected " + std::to_string(pf.blocks.size()));
            for (auto& s : segs) {
                // single element per segment
                auto sub = tokenize(s);
                if (sub.size() != 1) fail_line(lineno, "each part entry is one field element");
                s = sub[0];
            }
            pf.part_rows.emplace_back(w, segs);
        } else {
            fail_line(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (!pf.field) throw MtxError("missing field line");
    if (pf.blocks.empty()) throw MtxError("missing block lines");
    return pf;
}

} // namespace

MTCode parse_code_text(const std::string& text) {
    ParsedFile pf = parse_file(text, false);
    auto shape = ModuleShape::make(pf.field, pf.blocks);
    std::vector<std::vector<Poly>> gens;
    for (const auto& segs : pf.gen_segments) {
        std::vector<Poly> tuple;
        for (const auto& s : segs) tuple.push_back(Poly::decode(pf.field, s));
        gens.push_back(std::move(tuple));
    }
    return MTCode(shape, std::move(gens));
}

MTCode parse_trace_text(const std::string& text) {
    ParsedFile pf = parse_file(text, true);
    require(pf.gen_segments.empty(), "trace input takes part lines, not gen lines");
    auto spec = Spectrum::build(pf.field, pf.blocks);
    ConcatContext ctx(spec);
    std::vector<ConstituentCode> parts(spec->factor_count());
    for (size_t w = 0; w < parts.size(); ++w) {
        parts[w].w = w;
        parts[w].field = spec->factor(w).constituent_field;
        parts[w].basis = FqMat(parts[w].field, spec->ell());
    }
    for (const auto& [w1, elems] : pf.part_rows) {
        require(w1 >= 1 && w1 <= parts.size(),
                "part index " + std::to_string(w1) + " out of range 1.." +
                    std::to_string(parts.size()));
        const size_t w = w1 - 1;
        const Field* Fw = spec->factor(w).constituent_field;
        std::vector<uint32_t> row;
        for (size_t i = 0; i < elems.size(); ++i) {
            FieldElement v = Fw->decode(elems[i]);
            require(spec->factor(w).eps[i] == 1 || v.is_zero(),
                    "part " + std::to_string(w1) + ": nonzero entry outside the ε support");
            row.push_back(static_cast<uint32_t>(Fw->index_of(v)));
        }
        parts[w].basis.add_row(std::move(row));
    }
    for (auto& p : parts) rref(p.basis);
    return build_from_constituents(ctx, parts);
}

std::string emit_code_text(const MTCode& code) {
    const Field* F = code.field();
    std::ostringstream os;
    os << "field " << F->characteristic() << " " << F->degree();
    if (F->degree() >= 2) {
        os << " ";
        for (size_t i = 0; i < F->modulus().size(); ++i) {
            if (i) os << ',';
            os << F->modulus()[i];
        }
    }
    os << "\n";
    for (const Block& b : code.shape()->blocks())
        os << "block " << b.m << " " << F->encode(b.lambda) << "\n";
    for (const auto& g : code.generators()) {
        os << "gen ";
        for (size_t i = 0; i < g.size(); ++i) {
            if (i) os << " | ";
            os << g[i].encode();
        }
        os << "\n";
    }
    return os.str();
}

namespace {

std::string class_tag(const Spectrum& spec, size_t w) {
    const FactorInfo& fi = spec.factor(w);
    switch (fi.cls) {
    case FactorClass::self_reciprocal: return "S";
    case FactorClass::pair_lead: return "P:" + std::to_string(fi.partner + 1);
    case FactorClass::pair_partner: return "P*:" + std::to_string(fi.partner + 1);
    case FactorClass::unpaired: return "N";
    }
    return "?";
}

std::string eps_string(const std::vector<int>& eps) {
    std::string s;
    for (int e : eps) s += e ? '1' : '0';
    return s;
}

void spectrum_header(std::ostringstream& os, const Spectrum& spec, bool kv) {
    const Field* F = spec.field();
    if (kv) {
        os << "p = " << F->characteristic() << "\n";
        os << "k = " << F->degree() << "\n";
        os << "q = " << F->order() << "\n";
        os << "ell = " << spec.ell() << "\n";
        os << "n = " << spec.length() << "\n";
        os << "m = " << spec.exponent() << "\n";
        os << "r = " << spec.factor_count() << "\n";
        os << "s = " << spec.s() << "\n";
        os << "t = " << spec.t() << "\n";
        os << "e = " << spec.e() << "\n";
        for (size_t i = 0; i < spec.ell(); ++i)
            os << "block." << i + 1 << " = " << spec.blocks()[i].m << " "
               << F->encode(spec.blocks()[i].lambda) << "\n";
    } else {
        os << "field F_" << F->order() << " (p=" << F->characteristic() << ", k=" << F->degree()
           << "), n=" << spec.length() << ", exponent m=" << spec.exponent() << "\n";
        os << "blocks:";
        for (const Block& b : spec.blocks())
            os << " (" << b.m << "," << F->encode(b.lambda) << ")";
        os << "\n";
        os << "factors r=" << spec.factor_count() << " (self-reciprocal " << spec.s()
           << ", pairs " << (spec.t() - spec.s()) << ", unpaired " << (spec.e() - spec.t())
           << ")\n";
    }
}

} // namespace

std::string factor_report(const Spectrum& spec, const ReportOptions& opt) {
    std::ostringstream os;
    spectrum_header(os, spec, opt.kv);
    for (size_t w = 0; w < spec.factor_count(); ++w) {
        const FactorInfo& fi = spec.factor(w);
        if (opt.kv) {
            os << "factor." << w + 1 << ".class = " << class_tag(spec, w) << "\n";
            os << "factor." << w + 1 << ".deg = " << fi.degree << "\n";
            os << "factor." << w + 1 << ".poly = " << fi.g.encode() << "\n";
            os << "factor." << w + 1 << ".eps = " << eps_string(fi.eps) << "\n";
            if (fi.cls == FactorClass::pair_lead || fi.cls == FactorClass::pair_partner)
                os << "factor." << w + 1 << ".tau = " << fi.tau << "\n";
        } else {
            os << "w=" << w + 1 << "  class=" << class_tag(spec, w) << "  deg=" << fi.degree
               << "  poly=[" << fi.g.encode() << "]  (" << fi.g.pretty() << ")  eps="
               << eps_string(fi.eps);
            if (fi.cls == FactorClass::pair_lead || fi.cls == FactorClass::pair_partner)
                os << "  tau=" << fi.tau;
            os << "\n";
        }
    }
    if (spec.m_over_mi_vanishes())
        os << (opt.kv ? "warning.m_over_mi_zero = 1\n"
                      : "warning: some m/m_i reduces to zero mod p\n");
    return os.str();
}

std::string analyze_report(const MTCode& code, const ReportOptions& opt) {
    std::ostringstream os;
    SpectrumPtr spec = code.spectrum();
    spectrum_header(os, *spec, opt.kv);
    const size_t dim = code.dimension();
    MTCode dual = dual_code(code);
    DualityFlags fl = duality_flags(code, dual);
    LcdVerdict lv = lcd_sufficient(code, dual, fl);
    Poly h = code.parity_check();
    SelfDualExistence sde = self_dual_exists(*spec);

    if (opt.kv) {
        os << "rho = " << code.rho() << "\n";
        os << "dim = " << dim << "\n";
        os << "dual_dim = " << dual.rank() << "\n";
        os << "parity = " << h.encode() << "\n";
        os << "parity_degree = " << h.degree() << "\n";
        for (size_t i = 0; i < code.ell(); ++i)
            os << "projection." << i + 1 << " = " << code.project_block(i).encode() << "\n";
        for (size_t w = 0; w < spec->factor_count(); ++w) {
            const auto& cc = code.constituents()[w];
            os << "constituent." << w + 1 << ".dim = " << cc.dim() << "\n";
            for (size_t r = 0; r < cc.basis.nrows(); ++r) {
                os << "constituent." << w + 1 << ".row." << r + 1 << " =";
                for (size_t i = 0; i < spec->ell(); ++i)
                    os << " " << cc.field->encode(cc.field->from_index(cc.basis.rows[r][i]));
                os << "\n";
            }
        }
        os << "self_orthogonal = " << fl.is_self_orthogonal << "\n";
        os << "self_dual = " << fl.is_self_dual << "\n";
        os << "lcd = " << fl.is_lcd << "\n";
        os << "dual_containing = " << fl.is_dual_containing << "\n";
        os << "dim_intersection = " << fl.dim_intersection << "\n";
        os << "selfdual_exists = " << sde.exists << "\n";
        if (!sde.exists) os << "selfdual_blocker = " << sde.failed_clause << "\n";
        os << "lcd_rule.applicable = " << lv.applicable << "\n";
        os << "lcd_rule.small_dim = " << lv.small_dim << "\n";
        os << "lcd_rule.dim_eq_so = " << lv.dim_eq_so << "\n";
        os << "lcd_rule.dim_eq_dc = " << lv.dim_eq_dc << "\n";
        os << "lcd_rule.dim_eq_sd = " << lv.dim_eq_sd << "\n";
        os << "lcd_rule.proper_projections = " << lv.proper_projections << "\n";
        os << "lcd_rule.concluded = " << lv.lcd_concluded << "\n";
        if (lv.lcd_concluded) os << "lcd_rule.route = " << lv.route << "\n";
    } else {
        os << "generators rho = " << code.rho() << "\n";
        os << "dim = " << dim << "\n";
        os << "dim dual = " << dual.rank() << "\n";
        os << "parity check h = " << h.pretty() << "   [" << h.encode() << "]\n";
        os << "deg h = " << h.degree() << "\n";
        for (size_t i = 0; i < code.ell(); ++i)
            os << "projection w_" << i + 1 << " = " << code.project_block(i).pretty() << "\n";
        os << "constituents:\n";
        for (size_t w = 0; w < spec->factor_count(); ++w) {
            const auto& cc = code.constituents()[w];
            os << "  C_" << w + 1 << " dim " << cc.dim();
            if (cc.dim()) {
                os << "  basis";
                for (size_t r = 0; r < cc.basis.nrows(); ++r) {
                    os << " (";
                    for (size_t i = 0; i < spec->ell(); ++i) {
                        if (i) os << ", ";
                        os << cc.field->encode(cc.field->from_index(cc.basis.rows[r][i]));
                    }
                    os << ")";
                }
            }
            os << "\n";
        }
        os << "flags: self-orthogonal=" << fl.is_self_orthogonal
           << " self-dual=" << fl.is_self_dual << " lcd=" << fl.is_lcd
           << " dual-containing=" << fl.is_dual_containing
           << " dim(C∩C⊥)=" << fl.dim_intersection << "\n";
        os << "self-dual exists for this spectrum: " << (sde.exists ? "yes" : "no");
        if (!sde.exists) os << " (" << sde.failed_clause << ")";
        os << "\n";
        if (lv.applicable) {
            os << "lcd rules fired:";
            if (lv.small_dim) os << " small-dim";
            if (lv.dim_eq_so) os << " dim-eq-so";
            if (lv.dim_eq_dc) os << " dim-eq-dc";
            if (lv.dim_eq_sd) os << " dim-eq-sd";
            if (lv.proper_projections) os << " proper-projections";
            os << "\n";
            if (lv.lcd_concluded) os << "lcd concluded: " << lv.route << "\n";
        } else {
            os << "lcd rules not applicable (some twist is self-inverse)\n";
        }
    }

    if (code.rank() > 0) {
        BoundContext bctx(spec);
        BchReport bch = bch_bound(code, bctx);
        ConcatBoundReport cb = concat_bound(code, bctx, opt.exact_budget);
        if (opt.kv) {
            os << "bch_bound = " << bch.bound << "\n";
            os << "concat_bound = " << cb.bound << "\n";
        } else {
            os << "bch bound = " << bch.bound << ", concat bound = " << cb.bound << "\n";
        }
        if (opt.with_exact) {
            DistanceResult d = min_distance_exact(code, opt.exact_budget);
            if (opt.kv) {
                os << "d_min" << (d.exact ? "" : "_upper") << " = " << d.distance << "\n";
            } else {
                os << (d.exact ? "d_min = " : "d_min <= ") << d.distance
                   << (d.exact ? "" : " (enumeration over budget)") << "\n";
            }
        }
    }
    return os.str();
}

std::string census_report_text(const Spectrum& spec, const ReportOptions& opt) {
    std::ostringstream os;
    spectrum_header(os, spec, opt.kv);
    CensusReport rep = census(spec);
    for (const auto& row : rep.rows) {
        if (opt.kv) {
            os << "census." << row.w + 1 << ".class = " << class_tag(spec, row.w) << "\n";
            os << "census." << row.w + 1 << ".eps = " << row.eps << "\n";
            if (row.cls == FactorClass::pair_lead)
                os << "census." << row.w + 1 << ".tau = " << row.tau << "\n";
            os << "census." << row.w + 1 << ".subspaces = " << row.n_choices.to_string() << "\n";
            if (row.d_count)
                os << "census." << row.w + 1 << ".selfdual = " << row.d_count->to_string() << "\n";
            if (row.e_count)
                os << "census." << row.w + 1 << ".selforth = " << row.e_count->to_string() << "\n";
            os << "census." << row.w + 1 << ".case = " << row.case_tag << "\n";
        } else {
            os << "w=" << row.w + 1 << "  class=" << class_tag(spec, row.w)
               << "  deg=" << row.degree << "  eps=" << row.eps;
            if (row.cls == FactorClass::pair_lead) os << "  tau=" << row.tau;
            os << "  N=" << row.n_choices.to_string();
            os << "  D=" << (row.d_count ? row.d_count->to_string() : "-");
            os << "  E=" << (row.e_count ? row.e_count->to_string() : "-");
            os << "  [" << row.case_tag << "]\n";
        }
    }
    if (opt.kv) {
        os << "N_total = " << rep.total.to_string() << "\n";
        os << "N0 = " << rep.self_dual.to_string() << "\n";
        os << "N1 = " << rep.self_orthogonal.to_string() << "\n";
        os << "selfdual_exists = " << rep.existence.exists << "\n";
        if (!rep.existence.exists)
            os << "selfdual_blocker = " << rep.existence.failed_clause << "\n";
        if (rep.self_pairing_slots) os << "note.self_pairing_slots = 1\n";
        if (rep.beyond_closed_form) os << "warning.beyond_closed_form = 1\n";
    } else {
        os << "N = " << rep.total.to_string() << ", N0 = " << rep.self_dual.to_string()
           << ", N1 = " << rep.self_orthogonal.to_string() << "\n";
        if (!rep.existence.exists)
            os << "no self-dual code: " << rep.existence.failed_clause << "\n";
        if (rep.self_pairing_slots)
            os << "note: self-pairing unpaired slots present; counts include their\n"
                  "      isotropic-line configurations\n";
        if (rep.beyond_closed_form)
            os << "warning: an unpaired factor spans more than two blocks; its slot is\n"
                  "         counted as zero-only and the totals may undercount\n";
    }
    return os.str();
}

std::string bound_report_text(const MTCode& code, const ReportOptions& opt) {
    std::ostringstream os;
    SpectrumPtr spec = code.spectrum();
    require(code.rank() > 0, "bound: the zero code has no distance bound");
    BoundContext bctx(spec);
    BchReport bch = bch_bound(code, bctx);
    ConcatBoundReport cb = concat_bound(code, bctx, opt.exact_budget);
    auto list = [&](const std::vector<size_t>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    if (opt.kv) {
        os << "bch_bound = " << bch.bound << "\n";
        os << "bch_runs_cyclic = " << list(bch.runs_cyclic) << "\n";
        os << "bch_runs_linear = " << list(bch.runs_linear) << "\n";
        os << "concat_bound = " << cb.bound << "\n";
        os << "constituent_dists = " << list(cb.constituent_dists) << "\n";
        os << "concat_k = " << list(cb.k_values) << "\n";
        os << "inner_dists = " << list(cb.inner_dists) << "\n";
    } else {
        os << "bch bound = " << bch.bound << "  (cyclic runs " << list(bch.runs_cyclic)
           << ", linear runs " << list(bch.runs_linear) << ")\n";
        os << "concat bound = " << cb.bound << "  (constituent dists " << list(cb.constituent_dists)
           << ", K values " << list(cb.k_values) << ", inner dists " << list(cb.inner_dists)
           << ")\n";
    }
    if (opt.with_exact) {
        DistanceResult d = min_distance_exact(code, opt.exact_budget);
        if (opt.kv)
            os << "d_min" << (d.exact ? "" : "_upper") << " = " << d.distance << "\n";
        else
            os << (d.exact ? "d_min = " : "d_min <= ") << d.distance
               << (d.exact ? "" : " (enumeration over budget)") << "\n";
    }
    if (!opt.omega.empty()) {
        std::vector<FieldElement> omega;
        for (const std::string& tok : tokenize(opt.omega))
            omega.push_back(code.field()->decode(tok));
        DimBoundResult dres = dim_bound_double_twist(code, omega);
        if (opt.kv) {
            os << "dim_bound.applicable = " << dres.applicable << "\n";
            if (dres.applicable)
                os << "dim_bound = " << dres.bound << "\n";
            else
                os << "dim_bound.reason = " << dres.reason << "\n";
        } else {
            if (dres.applicable)
                os << "dim bound (second twist): dim >= " << dres.bound << "\n";
            else
                os << "dim bound (second twist): not applicable (" << dres.reason << ")\n";
        }
    }
    return os.str();
}

std::string dual_report_text(const MTCode& code) {
    SpectrumPtr spec = code.spectrum();
    MTCode d = blocks_pairwise_coprime(*code.shape()) ? dual_closed_form(code) : dual_code(code);
    if (blocks_pairwise_coprime(*code.shape())) {
        // the closed form must agree with the nullspace route
        MTCode dn = dual_code(code);
        require(same_rowspace(d.span_matrix(), dn.span_matrix()),
                "dual: closed form disagrees with nullspace dual");
    }
    std::string out = "# dual code (twists inverted)\n";
    out += emit_code_text(d);
    return out;
}

std::string search_report_text(const Spectrum& spec_ref, const std::string& predicate,
                               uint64_t cap, const ReportOptions& opt) {
    require(predicate == "selfdual" || predicate == "selforthogonal" || predicate == "lcd",
            "search: predicate must be selfdual | selforthogonal | lcd");
    auto spec = Spectrum::build(spec_ref.field(), spec_ref.blocks());
    BigUint total = count_all(*spec);
    if (BigUint(cap) < total)
        throw MtxError("search: N = " + total.to_string() + " codes exceed the cap of " +
                       std::to_string(cap) + "; use census for counts");
    std::ostringstream os;
    spectrum_header(os, *spec, opt.kv);
    size_t matches = 0, seen = 0;
    const bool need_lcd = predicate == "lcd";
    sweep_all_codes(spec, [&](const std::vector<ConstituentCode>& parts, const MTCode& code) {
        ++seen;
        CodePredicates p = eval_predicates(code, need_lcd);
        bool hit = (predicate == "selfdual")        ? p.self_dual
                   : (predicate == "selforthogonal") ? p.self_orthogonal
                                                     : p.lcd;
        if (!hit) return;
        ++matches;
        if (opt.kv) {
            os << "match." << matches << ".dim = " << p.dim << "\n";
            os << "match." << matches << ".constituent_dims =";
            for (const auto& part : parts) os << " " << part.dim();
            os << "\n";
        } else {
            os << "match " << matches << ": dim=" << p.dim << " constituent dims=(";
            for (size_t w = 0; w < parts.size(); ++w) os << (w ? "," : "") << parts[w].dim();
            os << ")\n";
        }
    });
    os << (opt.kv ? "codes = " : "codes swept = ") << seen << "\n";
    os << "matches = " << matches << "\n";
    return os.str();
}

} // namespace mtx
