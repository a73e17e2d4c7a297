#include "stabwalls/cli.hpp"

int main(int argc, char** argv) { return stabwalls::run(argc, argv); }
