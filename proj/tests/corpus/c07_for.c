int sum_to(int n) {
    int total = 0;
    int i;
    for (i = 1; i <= n; i++) {
        total += i;
    }
    return total;
}
