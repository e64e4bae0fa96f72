// CLI entry point; subcommands arrive with the pipeline modules.
#include <cstdio>
int main() { std::puts("tlsg: subcommands land after the encoder module"); return 0; }
