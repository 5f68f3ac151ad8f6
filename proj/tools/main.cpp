#include "cavjj/cli.hpp"

int main(int argc, char** argv) { return cavjj::run(argc, argv); }
