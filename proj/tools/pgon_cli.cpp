#include "cli_app.hpp"

int main(int argc, char** argv) { return pgon::cli::run(argc, argv); }
