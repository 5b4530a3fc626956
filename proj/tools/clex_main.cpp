#include "clex/nsp.hpp"

int main(int argc, char** argv) { return clex::nsp::cli_main(argc, argv); }
