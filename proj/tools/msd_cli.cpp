// Placeholder main; real subcommands land with the io module.
#include <cstdio>

int main() {
    std::puts("msd: not wired up yet");
    return 1;
}
