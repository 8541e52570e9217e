int count_pairs(int n) {
    int total = 0;
    int i;
    int j;
    for (i = 0; i < n; i++) {
        for (j = i + 1; j < n; j++) {
            if (compatible(i, j))
                total++;
        }
    }
    return total;
}
