int scan(int* data, int n) {
    int hits = 0;
    int i;
    for (i = 0; i < n; i++) {
        if (data[i] < 0)
            continue;
        if (data[i] == 0)
            break;
        hits++;
    }
    return hits;
}
