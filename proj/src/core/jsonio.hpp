#pragma once

#include <string>

#include "core/bcl.hpp"
#include "core/dilation.hpp"
#include "core/linear.hpp"
#include "core/monoid.hpp"
#include "core/multivar.hpp"
#include "core/orbits.hpp"
#include "core/report.hpp"

namespace dilatk {

// All parsers throw Error(Errc::parse) on malformed input.

SymSet parse_symset(const std::string& text);
std::string print_symset(const SymSet& s);

TailAffineMap parse_map(const std::string& text);
std::string print_map(const TailAffineMap& m);

FinFunc parse_finfunc(const std::string& text);
std::string print_finfunc(const FinFunc& h);

// {"n":..,"table":..} or a full map document, for operations accepting both.
bool looks_like_finfunc(const std::string& text);

SubsetDesc parse_subset(const std::string& text, const SymSet& universe);
std::string print_subset(const SubsetDesc& d);

DilationQuadruple parse_quad(const std::string& text);
std::string print_quad(const DilationQuadruple& q);

FuncFamily parse_family(const std::string& text);
std::string print_family(const FuncFamily& f);

BclData parse_bcl(const std::string& text);
std::string print_bcl(const BclData& d);

Matrix parse_matrix(const std::string& text, FieldRef field);
std::string print_matrix(const Matrix& m);

std::string print_report(const VerificationReport& r);
std::string print_profile(const OrbitProfile& p);
std::string print_wold(const WoldSplit& w, const OrbitProfile& p);
std::string print_injectivity(const SymSet& s, const InjectivityReport& r);

}  // namespace dilatk
