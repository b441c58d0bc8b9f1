#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rtab.h"

using nlohmann::ordered_json;

namespace {

[[noreturn]] void die_domain(rt_status s) {
    std::cerr << rt_status_name(s) << "\n";
    std::exit(1);
}

void ensure(rt_status s) {
    if (s != RT_OK) die_domain(s);
}

std::vector<int32_t> take_i32(int32_t* data, size_t len) {
    std::vector<int32_t> out(data, data + len);
    rt_free_i32(data);
    return out;
}

std::string take_str(char* s) {
    std::string out(s);
    rt_free_str(s);
    return out;
}

std::vector<int32_t> parse_word_arg(const std::string& text) {
    int32_t* data = nullptr;
    size_t len = 0;
    ensure(rt_parse_word(text.c_str(), &data, &len));
    return take_i32(data, len);
}

std::vector<int32_t> parse_partition_arg(const std::string& text) {
    int32_t* data = nullptr;
    size_t len = 0;
    ensure(rt_parse_partition(text.c_str(), &data, &len));
    return take_i32(data, len);
}

std::vector<int32_t> parse_perm_arg(const std::string& text) {
    int32_t* data = nullptr;
    size_t len = 0;
    ensure(rt_parse_perm(text.c_str(), &data, &len));
    return take_i32(data, len);
}

std::string fmt_word(const std::vector<int32_t>& w) {
    char* s = nullptr;
    ensure(rt_format_word(w.data(), w.size(), &s));
    return take_str(s);
}

std::string fmt_perm(const std::vector<int32_t>& w) {
    char* s = nullptr;
    ensure(rt_format_perm(w.data(), w.size(), &s));
    return take_str(s);
}

std::string fmt_parts(const std::vector<int32_t>& p) {
    char* s = nullptr;
    ensure(rt_format_partition(p.data(), p.size(), &s));
    return take_str(s);
}

ordered_json json_array(const int32_t* data, size_t len) {
    ordered_json a = ordered_json::array();
    for (size_t i = 0; i < len; i++) a.push_back(data[i]);
    return a;
}

ordered_json json_array(const std::vector<int32_t>& v) {
    return json_array(v.data(), v.size());
}

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int env_bound(int fallback) {
    const char* v = std::getenv("RT_MAX_N");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed <= 0 || parsed > 1000000) return fallback;
    return static_cast<int>(parsed);
}

void run_check(const std::string& text, bool json) {
    auto w = parse_word_arg(text);
    int32_t res[7];
    ensure(rt_richardson_check(w.data(), w.size(), res));
    static const char* names[7] = {"definition", "word",  "crop", "lslide",
                                   "evacuation", "gap",   "bruhat"};
    bool all = true;
    bool any = false;
    for (int i = 0; i < 7; i++) {
        all = all && res[i] == 1;
        any = any || res[i] == 1;
    }
    const char* verdict = all ? "RICHARDSON" : (any ? "INCONSISTENT" : "NOT_RICHARDSON");
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["word"] = json_array(w);
        ordered_json checks;
        for (int i = 0; i < 7; i++) checks[names[i]] = res[i] == 1;
        j["checks"] = checks;
        j["verdict"] = verdict;
        emit(j);
    } else {
        for (int i = 0; i < 7; i++)
            std::cout << names[i] << ": " << (res[i] ? "true" : "false") << "\n";
        std::cout << "verdict: " << verdict << "\n";
    }
    if (any && !all) std::exit(3);
}

void run_evacuate(const std::string& text, bool paths, bool json) {
    auto w = parse_word_arg(text);
    rt_trace* h = nullptr;
    ensure(rt_evacuate(w.data(), w.size(), &h));
    const int32_t* res = nullptr;
    size_t rlen = rt_trace_result(h, &res);
    std::vector<int32_t> result(res, res + rlen);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["word"] = json_array(w);
        j["result"] = json_array(result);
        if (paths) {
            ordered_json parr = ordered_json::array();
            for (size_t i = 0; i < rt_trace_path_count(h); i++) {
                const int32_t* cells = nullptr;
                size_t ncells = rt_trace_path(h, i, &cells);
                ordered_json pj;
                ordered_json carr = ordered_json::array();
                for (size_t c = 0; c < ncells; c++)
                    carr.push_back(ordered_json::array({cells[2 * c], cells[2 * c + 1]}));
                pj["cells"] = carr;
                pj["lslide"] = rt_trace_path_is_l(h, i) == 1;
                parr.push_back(pj);
            }
            j["paths"] = parr;
        }
        emit(j);
    } else {
        std::cout << "result: " << fmt_word(result) << "\n";
        if (paths) {
            for (size_t i = 0; i < rt_trace_path_count(h); i++) {
                const int32_t* cells = nullptr;
                size_t ncells = rt_trace_path(h, i, &cells);
                std::cout << "path " << i + 1 << ":";
                for (size_t c = 0; c < ncells; c++)
                    std::cout << " (" << cells[2 * c] << "," << cells[2 * c + 1] << ")";
                std::cout << " L=" << (rt_trace_path_is_l(h, i) ? "true" : "false") << "\n";
            }
        }
    }
    rt_trace_free(h);
}

void run_decompose(const std::string& text, bool json) {
    auto w = parse_word_arg(text);
    rt_veclist* h = nullptr;
    ensure(rt_prime_decomposition(w.data(), w.size(), &h));
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["word"] = json_array(w);
        ordered_json f = ordered_json::array();
        for (size_t i = 0; i < rt_veclist_count(h); i++) {
            const int32_t* data = nullptr;
            size_t len = rt_veclist_at(h, i, &data);
            f.push_back(json_array(data, len));
        }
        j["factors"] = f;
        emit(j);
    } else {
        for (size_t i = 0; i < rt_veclist_count(h); i++) {
            const int32_t* data = nullptr;
            size_t len = rt_veclist_at(h, i, &data);
            std::cout << fmt_word(std::vector<int32_t>(data, data + len)) << "\n";
        }
        std::cout << "count: " << rt_veclist_count(h) << "\n";
    }
    rt_veclist_free(h);
}

void run_psi(const std::string& text, bool json) {
    auto w = parse_word_arg(text);
    int32_t* data = nullptr;
    size_t len = 0;
    ensure(rt_psi(w.data(), w.size(), &data, &len));
    auto q = take_i32(data, len);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["word"] = json_array(w);
        j["result"] = json_array(q);
        emit(j);
    } else {
        std::cout << fmt_word(q) << "\n";
    }
}

void run_psi_inv(const std::string& text, int ell, bool json) {
    auto w = parse_word_arg(text);
    int32_t* data = nullptr;
    size_t len = 0;
    ensure(rt_psi_inverse(w.data(), w.size(), ell, &data, &len));
    auto r = take_i32(data, len);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["word"] = json_array(w);
        j["ell"] = ell;
        j["result"] = json_array(r);
        emit(j);
    } else {
        std::cout << fmt_word(r) << "\n";
    }
}

void run_count(const std::string& text, bool with_q, bool json) {
    auto parts = parse_partition_arg(text);
    if (with_q) {
        rt_qpoly* h = nullptr;
        ensure(rt_q_count_richardson(parts.data(), parts.size(), &h));
        char* s = nullptr;
        ensure(rt_qpoly_format(h, &s));
        std::string poly = take_str(s);
        if (json) {
            ordered_json j;
            j["schema"] = "1";
            j["shape"] = json_array(parts);
            ordered_json terms = ordered_json::array();
            for (size_t i = 0; i < rt_qpoly_terms(h); i++) {
                char* c = nullptr;
                ensure(rt_qpoly_coefficient(h, i, &c));
                ordered_json t;
                t["exponent"] = rt_qpoly_exponent(h, i);
                t["coefficient"] = take_str(c);
                terms.push_back(t);
            }
            j["terms"] = terms;
            j["polynomial"] = poly;
            emit(j);
        } else {
            std::cout << poly << "\n";
        }
        rt_qpoly_free(h);
    } else {
        char* s = nullptr;
        ensure(rt_count_richardson(parts.data(), parts.size(), &s));
        std::string count = take_str(s);
        if (json) {
            ordered_json j;
            j["schema"] = "1";
            j["shape"] = json_array(parts);
            j["count"] = count;
            emit(j);
        } else {
            std::cout << count << "\n";
        }
    }
}

void run_motzkin(int n, bool json) {
    char* s = nullptr;
    ensure(rt_motzkin(n, &s));
    std::string value = take_str(s);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["n"] = n;
        j["motzkin"] = value;
        emit(j);
    } else {
        std::cout << value << "\n";
    }
}

void run_refine(int n, bool json) {
    rt_refine* h = nullptr;
    ensure(rt_motzkin_refinement(n, env_bound(20), &h));
    char* ts = nullptr;
    ensure(rt_refine_total(h, &ts));
    std::string total = take_str(ts);
    char* ms = nullptr;
    ensure(rt_refine_motzkin(h, &ms));
    std::string mz = take_str(ms);
    bool ok = rt_refine_ok(h) == 1;
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["n"] = n;
        ordered_json rows = ordered_json::array();
        for (size_t i = 0; i < rt_refine_rows(h); i++) {
            const int32_t* parts = nullptr;
            size_t nparts = rt_refine_shape(h, i, &parts);
            char* c = nullptr;
            ensure(rt_refine_count(h, i, &c));
            ordered_json row;
            row["shape"] = json_array(parts, nparts);
            row["count"] = take_str(c);
            rows.push_back(row);
        }
        j["rows"] = rows;
        j["total"] = total;
        j["motzkin"] = mz;
        j["ok"] = ok;
        emit(j);
    } else {
        for (size_t i = 0; i < rt_refine_rows(h); i++) {
            const int32_t* parts = nullptr;
            size_t nparts = rt_refine_shape(h, i, &parts);
            char* c = nullptr;
            ensure(rt_refine_count(h, i, &c));
            std::cout << fmt_parts(std::vector<int32_t>(parts, parts + nparts)) << ": "
                      << take_str(c) << "\n";
        }
        std::cout << "total: " << total << "\n";
        std::cout << "motzkin: " << mz << "\n";
        std::cout << "ok: " << (ok ? "true" : "false") << "\n";
    }
    rt_refine_free(h);
    if (!ok) std::exit(3);
}

void run_proportion(int n, bool json) {
    char* s = nullptr;
    ensure(rt_proportion(n, &s));
    std::string value = take_str(s);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["n"] = n;
        j["proportion"] = value;
        emit(j);
    } else {
        std::cout << value << "\n";
    }
}

void run_envelope(const std::string& text, bool json) {
    auto w = parse_word_arg(text);
    int32_t* vdata = nullptr;
    size_t vlen = 0;
    int32_t* wdata = nullptr;
    size_t wlen = 0;
    int64_t gap = 0;
    int64_t target = 0;
    ensure(rt_envelope(w.data(), w.size(), &vdata, &vlen, &wdata, &wlen, &gap, &target));
    auto v = take_i32(vdata, vlen);
    auto ww = take_i32(wdata, wlen);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["word"] = json_array(w);
        j["v"] = json_array(v);
        j["w"] = json_array(ww);
        j["gap"] = gap;
        j["target"] = target;
        emit(j);
    } else {
        std::cout << "v: " << fmt_perm(v) << "\n";
        std::cout << "w: " << fmt_perm(ww) << "\n";
        std::cout << "gap: " << gap << "\n";
        std::cout << "target: " << target << "\n";
    }
}

void run_cells(const std::string& text, bool top, bool json) {
    auto parts = parse_partition_arg(text);
    rt_cells* h = nullptr;
    int bound = env_bound(7);
    ensure(top ? rt_top_cells(parts.data(), parts.size(), bound, &h)
               : rt_enumerate_cells(parts.data(), parts.size(), bound, &h));
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["shape"] = json_array(parts);
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < rt_cells_count(h); i++) {
            const int32_t* vi = nullptr;
            size_t vn = rt_cells_v(h, i, &vi);
            const int32_t* wi = nullptr;
            size_t wn = rt_cells_w(h, i, &wi);
            ordered_json cj;
            cj["v"] = json_array(vi, vn);
            cj["w"] = json_array(wi, wn);
            cj["dim"] = rt_cells_dim(h, i);
            arr.push_back(cj);
        }
        j["cells"] = arr;
        emit(j);
    } else {
        for (size_t i = 0; i < rt_cells_count(h); i++) {
            const int32_t* vi = nullptr;
            size_t vn = rt_cells_v(h, i, &vi);
            const int32_t* wi = nullptr;
            size_t wn = rt_cells_w(h, i, &wi);
            std::cout << fmt_perm(std::vector<int32_t>(vi, vi + vn)) << " "
                      << fmt_perm(std::vector<int32_t>(wi, wi + wn)) << " "
                      << rt_cells_dim(h, i) << "\n";
        }
        std::cout << "count: " << rt_cells_count(h) << "\n";
    }
    rt_cells_free(h);
}

std::string pairs_line(const rt_pairs* h) {
    std::string out;
    for (size_t i = 0; i < rt_pairs_count(h); i++) {
        int32_t a = 0;
        int32_t b = 0;
        rt_pairs_at(h, i, &a, &b);
        out += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return out;
}

ordered_json pairs_json(const rt_pairs* h) {
    ordered_json arr = ordered_json::array();
    for (size_t i = 0; i < rt_pairs_count(h); i++) {
        int32_t a = 0;
        int32_t b = 0;
        rt_pairs_at(h, i, &a, &b);
        arr.push_back(ordered_json::array({a, b}));
    }
    return arr;
}

void run_smooth(const std::string& vtext, const std::string& wtext, bool json) {
    auto v = parse_perm_arg(vtext);
    auto w = parse_perm_arg(wtext);
    if (v.size() != w.size()) die_domain(RT_SIZE_MISMATCH);
    rt_pairs* p1 = nullptr;
    ensure(rt_deodhar_set(v.data(), w.data(), v.size(), &p1));
    std::vector<int32_t> vw0(v.rbegin(), v.rend());
    std::vector<int32_t> ww0(w.rbegin(), w.rend());
    int32_t n = static_cast<int32_t>(v.size());
    rt_pairs* p2 = nullptr;
    ensure(rt_deodhar_set(ww0.data(), vw0.data(), n, &p2));
    int64_t lv = 0;
    int64_t lw = 0;
    ensure(rt_perm_length(v.data(), v.size(), &lv));
    ensure(rt_perm_length(w.data(), w.size(), &lw));
    int smooth = 0;
    ensure(rt_richardson_smooth(v.data(), w.data(), v.size(), &smooth));
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["v"] = json_array(v);
        j["w"] = json_array(w);
        j["pairs"] = pairs_json(p1);
        j["dual_pairs"] = pairs_json(p2);
        j["gap"] = lw - lv;
        j["smooth"] = smooth == 1;
        emit(j);
    } else {
        std::cout << "pairs:" << pairs_line(p1) << "\n";
        std::cout << "dual-pairs:" << pairs_line(p2) << "\n";
        std::cout << "gap: " << lw - lv << "\n";
        std::cout << "smooth: " << (smooth ? "true" : "false") << "\n";
    }
    rt_pairs_free(p1);
    rt_pairs_free(p2);
}

void run_guemes(const std::string& text, bool json) {
    auto w = parse_word_arg(text);
    rt_veclist* h = nullptr;
    ensure(rt_hook_expansion(w.data(), w.size(), &h));
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["word"] = json_array(w);
        ordered_json arr = ordered_json::array();
        for (size_t i = 0; i < rt_veclist_count(h); i++) {
            const int32_t* data = nullptr;
            size_t len = rt_veclist_at(h, i, &data);
            arr.push_back(json_array(data, len));
        }
        j["permutations"] = arr;
        emit(j);
    } else {
        for (size_t i = 0; i < rt_veclist_count(h); i++) {
            const int32_t* data = nullptr;
            size_t len = rt_veclist_at(h, i, &data);
            std::cout << fmt_perm(std::vector<int32_t>(data, data + len)) << "\n";
        }
        std::cout << "count: " << rt_veclist_count(h) << "\n";
    }
    rt_veclist_free(h);
}

void run_kcomp(int n, const std::string& itext, bool dual, bool json) {
    auto elems = parse_word_arg(itext);
    int32_t* data = nullptr;
    size_t len = 0;
    ensure(rt_k_component(elems.data(), elems.size(), n, dual ? 1 : 0, &data, &len));
    auto word = take_i32(data, len);
    rt_veclist* rows = nullptr;
    ensure(rt_tableau_rows(word.data(), word.size(), &rows));
    std::string rows_text;
    ordered_json rows_json = ordered_json::array();
    for (size_t i = 0; i < rt_veclist_count(rows); i++) {
        const int32_t* rdata = nullptr;
        size_t rlen = rt_veclist_at(rows, i, &rdata);
        if (i) rows_text += ",";
        rows_text += "(";
        ordered_json rj = ordered_json::array();
        for (size_t c = 0; c < rlen; c++) {
            if (c) rows_text += ",";
            rows_text += std::to_string(rdata[c]);
            rj.push_back(rdata[c]);
        }
        rows_text += ")";
        rows_json.push_back(rj);
    }
    rt_veclist_free(rows);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["n"] = n;
        j["subset"] = json_array(elems);
        j["word"] = json_array(word);
        j["rows"] = rows_json;
        emit(j);
    } else {
        std::cout << "word: " << fmt_word(word) << "\n";
        std::cout << "rows: " << rows_text << "\n";
    }
}

void run_selftest(int max_n, bool json) {
    int passed = 0;
    int failed = 0;
    char* report = nullptr;
    ensure(rt_selftest(max_n, &passed, &failed, &report));
    std::string text = take_str(report);
    if (json) {
        ordered_json j;
        j["schema"] = "1";
        j["max_n"] = max_n;
        ordered_json lines = ordered_json::array();
        size_t start = 0;
        while (start < text.size()) {
            size_t end = text.find('\n', start);
            if (end == std::string::npos) end = text.size();
            lines.push_back(text.substr(start, end - start));
            start = end + 1;
        }
        j["report"] = lines;
        j["passed"] = passed;
        j["failed"] = failed;
        emit(j);
    } else {
        std::cout << text;
        std::cout << "passed: " << passed << "\n";
        std::cout << "failed: " << failed << "\n";
    }
    if (failed > 0) std::exit(3);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Richardson tableau toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "JSON output");

    std::string word;
    std::string vtext;
    std::string wtext;
    std::string parts;
    std::string subset;
    int n = 0;
    int ell = 0;
    int max_n = env_bound(8);
    bool paths = false;
    bool with_q = false;
    bool top = false;
    bool dual = false;

    auto* c_check = app.add_subcommand("check", "Run all Richardson characterizations");
    c_check->add_option("word", word, "lattice word")->required();
    c_check->callback([&] { run_check(word, json); });

    auto* c_evac = app.add_subcommand("evacuate", "Evacuation");
    c_evac->add_option("word", word, "lattice word")->required();
    c_evac->add_flag("--paths", paths, "print slide paths");
    c_evac->callback([&] { run_evacuate(word, paths, json); });

    auto* c_dec = app.add_subcommand("decompose", "Prime decomposition");
    c_dec->add_option("word", word, "Richardson word")->required();
    c_dec->callback([&] { run_decompose(word, json); });

    auto* c_psi = app.add_subcommand("psi", "Delete-two bijection");
    c_psi->add_option("word", word, "prime Richardson word")->required();
    c_psi->callback([&] { run_psi(word, json); });

    auto* c_psiinv = app.add_subcommand("psi-inv", "Inverse of the delete-two bijection");
    c_psiinv->add_option("word", word, "Richardson word")->required();
    c_psiinv->add_option("ell", ell, "largest letter of the preimage")->required();
    c_psiinv->callback([&] { run_psi_inv(word, ell, json); });

    auto* c_count = app.add_subcommand("count", "Count Richardson tableaux of a shape");
    c_count->add_option("partition", parts, "shape")->required();
    c_count->add_flag("--q", with_q, "major-index q-polynomial");
    c_count->callback([&] { run_count(parts, with_q, json); });

    auto* c_motzkin = app.add_subcommand("motzkin", "Motzkin number");
    c_motzkin->add_option("n", n, "index")->required();
    c_motzkin->callback([&] { run_motzkin(n, json); });

    auto* c_refine = app.add_subcommand("refine", "Per-shape counts against the Motzkin number");
    c_refine->add_option("n", n, "size")->required();
    c_refine->callback([&] { run_refine(n, json); });

    auto* c_prop = app.add_subcommand("proportion", "Richardson share of involutions");
    c_prop->add_option("n", n, "size")->required();
    c_prop->callback([&] { run_proportion(n, json); });

    auto* c_env = app.add_subcommand("envelope", "Reading permutations and length gap");
    c_env->add_option("word", word, "lattice word")->required();
    c_env->callback([&] { run_envelope(word, json); });

    auto* c_cells = app.add_subcommand("cells", "Fiber cells of a shape");
    c_cells->add_option("partition", parts, "shape")->required();
    c_cells->add_flag("--top", top, "top-dimensional cells only");
    c_cells->callback([&] { run_cells(parts, top, json); });

    auto* c_smooth = app.add_subcommand("smooth", "Deodhar smoothness certificate");
    c_smooth->add_option("v", vtext, "lower permutation")->required();
    c_smooth->add_option("w", wtext, "upper permutation")->required();
    c_smooth->callback([&] { run_smooth(vtext, wtext, json); });

    auto* c_guemes = app.add_subcommand("guemes", "Hook-shape Schubert expansion");
    c_guemes->add_option("word", word, "hook-shape Richardson word")->required();
    c_guemes->callback([&] { run_guemes(word, json); });

    auto* c_kcomp = app.add_subcommand("kcomp", "Two-coloring component tableau");
    c_kcomp->add_option("n", n, "ground set size")->required();
    c_kcomp->add_option("subset", subset, "black elements")->required();
    c_kcomp->add_flag("--dual", dual, "dual tableau before evacuation");
    c_kcomp->callback([&] { run_kcomp(n, subset, dual, json); });

    auto* c_self = app.add_subcommand("selftest", "Full invariant suite");
    c_self->add_option("--max-n", max_n, "enumeration cap");
    c_self->callback([&] { run_selftest(max_n, json); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}
