#include "frieze/frieze.h"

#include "frieze/catalog.hpp"
#include "frieze/coxeter.hpp"
#include "frieze/enumerator.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct frz_catalog_s {
    frieze::Catalog catalog;
};

namespace {

thread_local std::string last_error;

frz_status fail(frz_status st, const std::string& msg) {
    last_error = msg;
    return st;
}

// Maps library exceptions onto status codes.
template <class F>
frz_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const frieze::ParseError& e) {
        return fail(FRZ_E_PARSE, e.what());
    } catch (const frieze::BoxTooLarge& e) {
        return fail(FRZ_E_LIMIT, e.what());
    } catch (const frieze::Unsupported& e) {
        return fail(FRZ_E_UNSUPPORTED, e.what());
    } catch (const frieze::ClosureFailure& e) {
        return fail(FRZ_E_INVALID_ARGUMENT, e.what());
    } catch (const frieze::NotClosed& e) {
        return fail(FRZ_E_INVALID_ARGUMENT, e.what());
    } catch (const frieze::NonPositive& e) {
        return fail(FRZ_E_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(FRZ_E_INVALID_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(FRZ_E_INTERNAL, e.what());
    } catch (...) {
        return fail(FRZ_E_INTERNAL, "unknown error");
    }
}

char* dup_string(const std::string& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

frieze::PatternKind to_kind(frz_kind k) {
    switch (k) {
        case FRZ_KIND_Y: return frieze::PatternKind::Y;
        case FRZ_KIND_COXETER: return frieze::PatternKind::Coxeter;
    }
    throw std::invalid_argument("unknown pattern kind");
}

frieze::Format to_format(frz_format f) {
    switch (f) {
        case FRZ_FORMAT_JSON: return frieze::Format::Json;
        case FRZ_FORMAT_CSV: return frieze::Format::Csv;
        case FRZ_FORMAT_TABLE: return frieze::Format::Table;
    }
    throw std::invalid_argument("unknown output format");
}

frieze::GenerationRequest make_request(frieze::PatternKind kind, int width, const frz_options* opts) {
    frieze::GenerationRequest req;
    req.kind = kind;
    req.width = width;
    req.options.max_candidates = frieze::max_candidates_from_env();
    if (opts != nullptr) {
        if (opts->bounds != nullptr && opts->n_bounds > 0)
            req.bounds = frieze::SearchBox{{opts->bounds, opts->bounds + opts->n_bounds}};
        req.options.parallelism = opts->parallelism == 0 ? 1 : opts->parallelism;
        if (opts->max_candidates != 0) req.options.max_candidates = opts->max_candidates;
    }
    return req;
}

frz_status need(const void* p, const char* what) {
    return p == nullptr ? fail(FRZ_E_INVALID_ARGUMENT, std::string(what) + " must not be NULL") : FRZ_OK;
}

}  // namespace

extern "C" {

const char* frz_version(void) { return "1.0.0"; }

const char* frz_status_string(frz_status status) {
    switch (status) {
        case FRZ_OK: return "ok";
        case FRZ_E_VERIFICATION: return "verification failed";
        case FRZ_E_INVALID_ARGUMENT: return "invalid argument";
        case FRZ_E_PARSE: return "parse error";
        case FRZ_E_LIMIT: return "candidate limit exceeded";
        case FRZ_E_UNSUPPORTED: return "unsupported request";
        case FRZ_E_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* frz_last_error(void) { return last_error.c_str(); }

void frz_string_free(char* s) { std::free(s); }

frz_status frz_enumerate(frz_kind kind, int width, const frz_options* options, frz_catalog* out) {
    if (auto st = need(out, "out")) return st;
    *out = nullptr;
    return guarded([&] {
        auto req = make_request(to_kind(kind), width, options);
        *out = new frz_catalog_s{frieze::enumerate_catalog(req)};
        return FRZ_OK;
    });
}

frz_status frz_catalog_parse(const char* text, size_t length, frz_catalog* out) {
    if (auto st = need(out, "out")) return st;
    *out = nullptr;
    if (auto st = need(text, "text")) return st;
    return guarded([&] {
        *out = new frz_catalog_s{frieze::parse_catalog(std::string_view(text, length))};
        return FRZ_OK;
    });
}

frz_status frz_pattern_from_first_row(frz_kind kind, int width, const char* const* entries, size_t count,
                                      frz_catalog* out) {
    if (auto st = need(out, "out")) return st;
    *out = nullptr;
    if (auto st = need(entries, "entries")) return st;
    return guarded([&] {
        if (width < 1) throw std::invalid_argument("width must be at least 1");
        if (count != static_cast<std::size_t>(width) + 3)
            throw std::invalid_argument("first row of a width " + std::to_string(width) + " pattern has " +
                                        std::to_string(width + 3) + " entries");
        frieze::Row row;
        for (std::size_t i = 0; i < count; ++i) {
            try {
                row.push_back(frieze::Rational::parse(entries[i] ? entries[i] : ""));
            } catch (const std::exception& e) {
                throw frieze::ParseError(e.what());
            }
        }
        const auto k = to_kind(kind);
        std::vector<frieze::PeriodicPattern> ps;
        if (k == frieze::PatternKind::Y) {
            ps.push_back(frieze::propagate_y(row, width));
        } else {
            frieze::Quiddity q;
            for (const auto& x : row) {
                auto v = x.to_int64();
                if (!v) throw std::invalid_argument("quiddity entries must be integers");
                q.push_back(*v);
            }
            ps.push_back(frieze::frieze_from_quiddity(q));
        }
        *out = new frz_catalog_s{frieze::make_catalog(k, width, std::move(ps))};
        return FRZ_OK;
    });
}

void frz_catalog_free(frz_catalog catalog) { delete catalog; }

size_t frz_catalog_size(frz_catalog catalog) { return catalog ? catalog->catalog.entries.size() : 0; }

int frz_catalog_width(frz_catalog catalog) { return catalog ? catalog->catalog.width : 0; }

frz_kind frz_catalog_kind(frz_catalog catalog) {
    return catalog && catalog->catalog.kind == frieze::PatternKind::Coxeter ? FRZ_KIND_COXETER : FRZ_KIND_Y;
}

frz_status frz_catalog_serialize(frz_catalog catalog, frz_format format, char** out) {
    if (auto st = need(catalog, "catalog")) return st;
    if (auto st = need(out, "out")) return st;
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(frieze::serialize(catalog->catalog, to_format(format)));
        return FRZ_OK;
    });
}

frz_status frz_catalog_render(frz_catalog catalog, size_t index, char** out) {
    if (auto st = need(catalog, "catalog")) return st;
    if (auto st = need(out, "out")) return st;
    *out = nullptr;
    return guarded([&] {
        if (index >= catalog->catalog.entries.size()) throw std::invalid_argument("pattern index out of range");
        *out = dup_string(frieze::render_ascii(catalog->catalog.entries[index].pattern));
        return FRZ_OK;
    });
}

frz_status frz_catalog_orbits(frz_catalog catalog, char** out) {
    if (auto st = need(catalog, "catalog")) return st;
    if (auto st = need(out, "out")) return st;
    *out = nullptr;
    return guarded([&] {
        *out = dup_string(frieze::orbits_report(catalog->catalog));
        return FRZ_OK;
    });
}

frz_status frz_catalog_verify(frz_catalog catalog, char** report, size_t* n_failed) {
    if (auto st = need(catalog, "catalog")) return st;
    return guarded([&] {
        const auto r = frieze::verify_catalog(catalog->catalog);
        if (report) *report = dup_string(r.text);
        if (n_failed) *n_failed = r.failed;
        if (r.failed == 0) return FRZ_OK;
        return fail(FRZ_E_VERIFICATION, std::to_string(r.failed) + " pattern(s) failed verification");
    });
}

frz_status frz_map_report(int width, const frz_options* options, frz_format format, char** out) {
    if (auto st = need(out, "out")) return st;
    *out = nullptr;
    return guarded([&] {
        auto req = make_request(frieze::PatternKind::Y, width, options);
        *out = dup_string(frieze::map_report(req, to_format(format)));
        return FRZ_OK;
    });
}

}  // extern "C"
