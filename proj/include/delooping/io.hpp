#pragma once

#include <string>

#include "delooping/certificates.hpp"
#include "delooping/module.hpp"

namespace dl {

AlgPtr parse_algebra(const std::string& text);
AlgPtr load_algebra(const std::string& path);
std::string print_algebra(const PathAlgebra& a);

// Module text: "dims v:n ..." and "map arrow [[..],..]" lines; unmapped arrows are zero.
Module parse_module(const std::string& text, const AlgPtr& a);
// A module reference: S<v>, P<v>, I<v> or a file path.
Module resolve_module(const std::string& ref, const AlgPtr& a);
std::string print_module(const Module& m, const std::string& name = "");

// Certificate text: inline "module NAME ... end" blocks, "target REF",
// "term REF [witness auto|adjoint|pool|over REF]" lines in order C_0, C_1, ...,
// and "map i" blocks of "block VERTEX MATRIX" lines closed by "end".
// REF is an inline name, S<v>/P<v>/I<v>, or a module file relative to base_dir.
struct CertificateFile {
  DdellCertificate cert;
  AlgPtr algebra;
  std::string algebra_path;
  std::string target_ref;
};
CertificateFile parse_certificate(const std::string& text, AlgPtr a = nullptr, const std::string& base_dir = "");
CertificateFile load_certificate(const std::string& path, AlgPtr a = nullptr);
std::string print_certificate(const DdellCertificate& c, const std::string& algebra_path = "");
bool same_certificate(const DdellCertificate& a, const DdellCertificate& b);

Mat parse_matrix(const std::string& text, std::size_t rows, std::size_t cols, Field f);
Scalar parse_scalar(const std::string& text, Field f);
std::string read_file(const std::string& path);

}  // namespace dl
